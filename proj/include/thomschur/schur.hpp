#pragma once

#include <vector>

#include "thomschur/alphabet.hpp"
#include "thomschur/mpoly.hpp"
#include "thomschur/partition.hpp"

namespace thomschur {

// Complete functions S_i of a virtual alphabet, computed once per argument
// by exact truncated power-series arithmetic and then read off as needed.
// The determinants reuse the S_i heavily, so keep one context per argument.
class SeriesContext {
public:
    explicit SeriesContext(VirtualAlphabet v);

    const VirtualAlphabet& argument() const { return v_; }
    // S_i of the argument; 0 for i < 0, 1 for i = 0
    const MPoly& complete(int i);

private:
    void ensure(int degree);
    VirtualAlphabet v_;
    std::vector<MPoly> coeffs_; // coefficients of the generating series
};

// S_i(v): coefficient of z^i in prod_{b in minus}(1-bz) / prod_{a in plus}(1-az)
MPoly complete_function(int i, const VirtualAlphabet& v);

// Schur function of an arbitrary integer sequence: the k x k determinant
// with entries S_{i_p + p - q}(v).
MPoly schur(const std::vector<int>& seq, const VirtualAlphabet& v);
MPoly schur(const std::vector<int>& seq, SeriesContext& ctx);
MPoly schur(const Partition& p, const VirtualAlphabet& v);
MPoly schur(const Partition& p, SeriesContext& ctx);

// Skew Schur function S_{lambda/mu}(v) via the skew Jacobi-Trudi determinant
// det[S_{lambda_p - mu_q - p + q}] over weakly decreasing lambda, mu.
MPoly skew_schur(const Partition& lambda, const Partition& mu, const VirtualAlphabet& v);

// prod_{a in A, b in B} (a - b)
MPoly resultant(const Alphabet& a, const Alphabet& b);

// Factorized evaluation of S over the concatenated index
// (j_1,...,j_k, i_1+n,...,i_m+n) on A - B with |A| = m, |B| = n:
// S_I(A) * R(A,B) * S_J(-B).
MPoly schur_factorized(const Partition& J, const Partition& I, const Alphabet& a,
                       const Alphabet& b);

// F(A, v) = sum over partitions I = (i_1<=...<=i_m<=n) of
// S_I(A) * S_{n-i_m,...,n-i_1,n+|I|}(v), with m = |A|.
MPoly f_function(const Alphabet& a, int n, const VirtualAlphabet& v);

// (-1)^j S_j(-v)
MPoly lambda_function(int j, const VirtualAlphabet& v);

inline bool hook_contains(const Partition& p, int m, int n) { return p.in_hook(m, n); }

} // namespace thomschur
