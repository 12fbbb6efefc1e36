#pragma once

#include <vector>

#include "thomschur/ints.hpp"
#include "thomschur/mpoly.hpp"

namespace thomschur {

// Exact determinant of a square polynomial matrix.  Cofactor expansion for
// order <= 5, Bareiss fraction-free elimination (with exact divisions) above.
MPoly det_fraction_free(const std::vector<std::vector<MPoly>>& m);

struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rat>> a; // rows x cols

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<Rat>(c, Rat(0))) {}
    Rat& at(int r, int c) { return a[r][c]; }
    const Rat& at(int r, int c) const { return a[r][c]; }
};

struct LinearSolution {
    std::vector<Rat> solution; // one solution (free unknowns set to 0)
    int kernel_dim = 0;
    int rank = 0;
};

// Solves A v = rhs exactly.  Pivoting picks the entry with the
// largest-magnitude numerator in the current column block.
// Throws InconsistentSystem when no solution exists.
LinearSolution solve_rational_system(const RatMatrix& A, const std::vector<Rat>& rhs);

int rational_rank(const RatMatrix& A);

} // namespace thomschur
