#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thomschur {

// Partition with weakly increasing parts (the convention used throughout the
// surface of this library).  Canonical form has no zero parts.
class Partition {
public:
    Partition() = default;
    // parts must be weakly increasing; zeros are stripped
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    // parts padded with leading zeros to the given length (>= length())
    std::vector<int> padded(int len) const;
    // weakly decreasing view
    std::vector<int> decreasing() const;

    Partition conjugate() const;
    // diagram containment
    bool contains(const Partition& other) const;
    // containment in the (m,n)-hook: at most m parts, or every part beyond
    // the top m is <= n
    bool in_hook(int m, int n) const;

    // order: by weight, then lexicographically on the increasing part lists
    bool operator<(const Partition& o) const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // e.g. "133", or "6,10" when a part needs two digits
    std::string str() const;

private:
    std::vector<int> parts_;
};

// Turns an arbitrary integer sequence into 0 or +/- a partition via the
// column-permutation rule of the defining determinant.  nullopt means the
// determinant vanishes identically.
std::optional<std::pair<int, Partition>> straighten(const std::vector<int>& seq);

struct PartitionFilter {
    std::optional<int> max_length;
    std::optional<Partition> contains;     // must contain this diagram
    std::optional<std::pair<int, int>> in_hook;
    std::optional<std::pair<int, int>> not_in_hook;
};

// All partitions of the given weight passing the filter, sorted.
std::vector<Partition> enumerate_partitions(int weight,
                                            const PartitionFilter& filter = {});

} // namespace thomschur
