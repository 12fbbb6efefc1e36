#include "thomschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thomschur/errors.hpp"

namespace thomschur {

Partition::Partition(std::vector<int> parts)
{
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] > parts[i + 1])
            throw Error("partition parts must be weakly increasing");
    for (int p : parts) {
        if (p < 0)
            throw Error("partition parts must be nonnegative");
        if (p > 0)
            parts_.push_back(p);
    }
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int len) const
{
    if (len < length())
        throw Error("pad length below partition length");
    std::vector<int> out(static_cast<std::size_t>(len - length()), 0);
    out.insert(out.end(), parts_.begin(), parts_.end());
    return out;
}

std::vector<int> Partition::decreasing() const
{
    std::vector<int> out(parts_.rbegin(), parts_.rend());
    return out;
}

Partition Partition::conjugate() const
{
    if (parts_.empty())
        return Partition();
    std::vector<int> dec = decreasing();
    int cols = dec[0];
    std::vector<int> conj; // built decreasing
    for (int c = 1; c <= cols; ++c) {
        int cnt = 0;
        for (int p : dec)
            if (p >= c)
                ++cnt;
        conj.push_back(cnt);
    }
    std::reverse(conj.begin(), conj.end());
    return Partition(conj);
}

bool Partition::contains(const Partition& other) const
{
    std::vector<int> a = decreasing();
    std::vector<int> b = other.decreasing();
    if (b.size() > a.size())
        return false;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (a[i] < b[i])
            return false;
    return true;
}

bool Partition::in_hook(int m, int n) const
{
    int k = length();
    if (k <= m)
        return true;
    // smallest k-m parts must all be <= n; parts_ is increasing
    return parts_[static_cast<std::size_t>(k - m - 1)] <= n;
}

bool Partition::operator<(const Partition& o) const
{
    if (weight() != o.weight())
        return weight() < o.weight();
    return parts_ < o.parts_;
}

std::string Partition::str() const
{
    bool wide = std::any_of(parts_.begin(), parts_.end(), [](int p) { return p >= 10; });
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i && wide)
            os << ",";
        os << parts_[i];
    }
    return os.str();
}

std::optional<std::pair<int, Partition>> straighten(const std::vector<int>& seq)
{
    const int k = static_cast<int>(seq.size());
    std::vector<int> m(seq.size());
    for (int p = 0; p < k; ++p) {
        m[static_cast<std::size_t>(p)] = seq[static_cast<std::size_t>(p)] + p + 1;
        if (m[static_cast<std::size_t>(p)] <= 0)
            return std::nullopt;
    }
    // sort increasingly, tracking permutation sign
    int sign = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j + 1 < k - i; ++j)
            if (m[static_cast<std::size_t>(j)] > m[static_cast<std::size_t>(j + 1)]) {
                std::swap(m[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(j + 1)]);
                sign = -sign;
            }
    for (int i = 0; i + 1 < k; ++i)
        if (m[static_cast<std::size_t>(i)] == m[static_cast<std::size_t>(i + 1)])
            return std::nullopt;
    std::vector<int> parts(seq.size());
    for (int p = 0; p < k; ++p)
        parts[static_cast<std::size_t>(p)] = m[static_cast<std::size_t>(p)] - p - 1;
    return std::make_pair(sign, Partition(parts));
}

namespace {

void enumerate_rec(int remaining, int min_part, std::vector<int>& acc,
                   std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = min_part; p <= remaining; ++p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int weight, const PartitionFilter& filter)
{
    if (weight < 0)
        throw Error("partition weight must be nonnegative");
    std::vector<Partition> all;
    std::vector<int> acc;
    enumerate_rec(weight, 1, acc, all);
    std::vector<Partition> out;
    for (const auto& p : all) {
        if (filter.max_length && p.length() > *filter.max_length)
            continue;
        if (filter.contains && !p.contains(*filter.contains))
            continue;
        if (filter.in_hook && !p.in_hook(filter.in_hook->first, filter.in_hook->second))
            continue;
        if (filter.not_in_hook
            && p.in_hook(filter.not_in_hook->first, filter.not_in_hook->second))
            continue;
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace thomschur
