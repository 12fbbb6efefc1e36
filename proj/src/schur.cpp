#include "thomschur/schur.hpp"

#include <algorithm>

#include "thomschur/errors.hpp"
#include "thomschur/matrix.hpp"

namespace thomschur {

SeriesContext::SeriesContext(VirtualAlphabet v) : v_(std::move(v))
{
    coeffs_.push_back(MPoly(1));
}

void SeriesContext::ensure(int degree)
{
    int have = static_cast<int>(coeffs_.size()) - 1;
    if (degree <= have)
        return;
    // recompute the truncation from scratch at the larger degree
    std::vector<MPoly> s(static_cast<std::size_t>(degree) + 1, MPoly(0));
    s[0] = MPoly(1);
    // multiply by (1 - bz) for every letter of the minus part
    for (const Letter& b : v_.minus.letters()) {
        for (int k = degree; k >= 1; --k)
            s[static_cast<std::size_t>(k)] -=
                b.form() * s[static_cast<std::size_t>(k - 1)];
    }
    // divide by (1 - az) for every letter of the plus part
    for (const Letter& a : v_.plus.letters()) {
        for (int k = 1; k <= degree; ++k)
            s[static_cast<std::size_t>(k)] +=
                a.form() * s[static_cast<std::size_t>(k - 1)];
    }
    coeffs_ = std::move(s);
}

const MPoly& SeriesContext::complete(int i)
{
    static const MPoly zero(0);
    if (i < 0)
        return zero;
    ensure(i);
    return coeffs_[static_cast<std::size_t>(i)];
}

MPoly complete_function(int i, const VirtualAlphabet& v)
{
    SeriesContext ctx(v);
    return ctx.complete(i);
}

MPoly schur(const std::vector<int>& seq, SeriesContext& ctx)
{
    const int k = static_cast<int>(seq.size());
    if (k == 0)
        return MPoly(1);
    int maxdeg = 0;
    for (int p = 0; p < k; ++p)
        maxdeg = std::max(maxdeg, seq[static_cast<std::size_t>(p)] + p);
    ctx.complete(std::max(maxdeg, 0)); // warm the series once
    std::vector<std::vector<MPoly>> m(static_cast<std::size_t>(k),
                                      std::vector<MPoly>(static_cast<std::size_t>(k)));
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                ctx.complete(seq[static_cast<std::size_t>(p)] + p - q);
    return det_fraction_free(m);
}

MPoly schur(const std::vector<int>& seq, const VirtualAlphabet& v)
{
    SeriesContext ctx(v);
    return schur(seq, ctx);
}

MPoly schur(const Partition& p, SeriesContext& ctx)
{
    return schur(p.parts(), ctx);
}

MPoly schur(const Partition& p, const VirtualAlphabet& v)
{
    return schur(p.parts(), v);
}

MPoly skew_schur(const Partition& lambda, const Partition& mu, const VirtualAlphabet& v)
{
    if (!lambda.contains(mu))
        return MPoly(0);
    std::vector<int> l = lambda.decreasing();
    std::vector<int> m = mu.decreasing();
    const int k = static_cast<int>(l.size());
    m.resize(static_cast<std::size_t>(k), 0);
    if (k == 0)
        return MPoly(1);
    SeriesContext ctx(v);
    std::vector<std::vector<MPoly>> mat(static_cast<std::size_t>(k),
                                        std::vector<MPoly>(static_cast<std::size_t>(k)));
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            mat[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = ctx.complete(
                l[static_cast<std::size_t>(p)] - m[static_cast<std::size_t>(q)] - p + q);
    return det_fraction_free(mat);
}

MPoly resultant(const Alphabet& a, const Alphabet& b)
{
    MPoly out(1);
    for (const Letter& la : a.letters())
        for (const Letter& lb : b.letters())
            out = out * (la.form() - lb.form());
    return out;
}

MPoly schur_factorized(const Partition& J, const Partition& I, const Alphabet& a,
                       const Alphabet& b)
{
    const int m = a.size();
    if (I.length() > m)
        throw CardinalityMismatch("partition I longer than |A|");
    MPoly si = schur(I, VirtualAlphabet(a, Alphabet()));
    MPoly sj = schur(J, VirtualAlphabet(Alphabet(), b));
    return si * resultant(a, b) * sj;
}

MPoly f_function(const Alphabet& a, int n, const VirtualAlphabet& v)
{
    const int m = a.size();
    SeriesContext ctx(v);
    VirtualAlphabet va(a, Alphabet());
    MPoly out;
    // partitions I = (i_1 <= ... <= i_m <= n), including the empty one
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        int weight = 0;
        for (int i : idx)
            weight += i;
        MPoly si = m == 0 ? MPoly(1) : schur(idx, va);
        if (!si.is_zero()) {
            std::vector<int> seq;
            seq.reserve(static_cast<std::size_t>(m) + 1);
            for (int p = m - 1; p >= 0; --p)
                seq.push_back(n - idx[static_cast<std::size_t>(p)]);
            seq.push_back(n + weight);
            out += si * schur(seq, ctx);
        }
        // advance to the next weakly increasing vector bounded by n
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n)
            --pos;
        if (pos < 0)
            break;
        int next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int p = pos; p < m; ++p)
            idx[static_cast<std::size_t>(p)] = next;
    }
    return out;
}

MPoly lambda_function(int j, const VirtualAlphabet& v)
{
    if (j < 0)
        throw Error("lambda index must be nonnegative");
    MPoly s = complete_function(j, v.negated());
    return j % 2 == 0 ? s : -s;
}

} // namespace thomschur
