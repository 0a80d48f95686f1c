#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "rgvcs/sharing.hpp"

namespace rgvcs {

// Per-group selection counts. Equivalence classes are represented by the
// descending arrangement; operations that accept arbitrary arrangements say
// so explicitly.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

    int sum() const;
    bool is_descending() const;
    Partition sorted_descending() const;
    std::string to_string() const;  // "2+1+0"

    auto operator<=>(const Partition&) const = default;
};

// All descending valid partitions of t across the scheme's groups: each part
// at most the group length, and the smallest part fitting the trailing group.
// Ordered descending-lexicographically, e.g. (3,0,0), (2,1,0), (1,1,1).
std::vector<Partition> valid_partitions(int t, const SchemeParams& params);

// Distinct part values with multiplicities, e.g. (2,1,0) -> {2^1, 1^1, 0^1}.
struct MultisetSignature {
    std::vector<std::pair<int, int>> items;  // (value, multiplicity), values distinct

    static MultisetSignature of(const Partition& partition);
};

}  // namespace rgvcs
