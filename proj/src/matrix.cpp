#include "thomschur/matrix.hpp"

#include <utility>

#include "thomschur/errors.hpp"

namespace thomschur {

namespace {

MPoly det_cofactor(const std::vector<std::vector<MPoly>>& m, std::vector<int>& cols, int row)
{
    const int n = static_cast<int>(m.size());
    if (row == n)
        return MPoly(1);
    MPoly out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (m[row][c].is_zero())
            continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k)
                rest.push_back(cols[j]);
        MPoly sub = m[row][c] * det_cofactor(m, rest, row + 1);
        if (k % 2 == 0)
            out += sub;
        else
            out -= sub;
    }
    return out;
}

MPoly det_bareiss(std::vector<std::vector<MPoly>> m)
{
    const int n = static_cast<int>(m.size());
    MPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return MPoly(0);
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.divide_exact(prev);
            }
            m[i][k] = MPoly(0);
        }
        prev = m[k][k];
    }
    MPoly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

} // namespace

MPoly det_fraction_free(const std::vector<std::vector<MPoly>>& m)
{
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return MPoly(1);
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw Error("det: matrix is not square");
    if (n <= 5) {
        std::vector<int> cols(n);
        for (int i = 0; i < n; ++i)
            cols[i] = i;
        return det_cofactor(m, cols, 0);
    }
    return det_bareiss(m);
}

namespace {

// elimination shared by the solver and the rank routine; returns the row
// echelon data (in place) plus the pivot column of each pivot row
int eliminate(RatMatrix& A, std::vector<Rat>* rhs, std::vector<int>& pivot_cols)
{
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        int best = -1;
        Int best_num = 0;
        for (int i = row; i < A.rows; ++i) {
            if (A.at(i, col) == 0)
                continue;
            Int num = abs(numerator(A.at(i, col)));
            if (best < 0 || num > best_num) {
                best = i;
                best_num = num;
            }
        }
        if (best < 0)
            continue;
        std::swap(A.a[row], A.a[best]);
        if (rhs)
            std::swap((*rhs)[row], (*rhs)[best]);
        const Rat piv = A.at(row, col);
        for (int i = 0; i < A.rows; ++i) {
            if (i == row || A.at(i, col) == 0)
                continue;
            Rat f = A.at(i, col) / piv;
            for (int j = col; j < A.cols; ++j)
                A.at(i, j) -= f * A.at(row, j);
            if (rhs)
                (*rhs)[i] -= f * (*rhs)[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return row;
}

} // namespace

LinearSolution solve_rational_system(const RatMatrix& A, const std::vector<Rat>& rhs)
{
    if (static_cast<int>(rhs.size()) != A.rows)
        throw Error("solve: rhs length does not match row count");
    RatMatrix M = A;
    std::vector<Rat> b = rhs;
    std::vector<int> pivot_cols;
    int rank = eliminate(M, &b, pivot_cols);
    for (int i = rank; i < M.rows; ++i)
        if (b[i] != 0)
            throw InconsistentSystem("no solution: rank deficiency with nonzero residual");
    LinearSolution out;
    out.rank = rank;
    out.kernel_dim = A.cols - rank;
    out.solution.assign(A.cols, Rat(0));
    for (int i = 0; i < rank; ++i)
        out.solution[pivot_cols[i]] = b[i] / M.at(i, pivot_cols[i]);
    return out;
}

int rational_rank(const RatMatrix& A)
{
    RatMatrix M = A;
    std::vector<int> pivot_cols;
    return eliminate(M, nullptr, pivot_cols);
}

} // namespace thomschur
