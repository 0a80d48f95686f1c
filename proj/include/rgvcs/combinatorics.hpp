#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "rgvcs/bigint.hpp"

namespace rgvcs {

// Cap on the number of states an exact enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

BigInt big_binomial(int n, int r);   // 0 when r < 0 or r > n
BigInt big_factorial(int n);

// Binomial as a double, for cheap budget estimates before exact enumeration.
double binomial_estimate(int n, int r);

// Visits every size-t subset of {0,...,n-1} in ascending lexicographic order.
template <typename F>
void for_each_combination(int n, int t, F&& visit) {
    if (t < 0 || t > n) return;
    std::vector<int> indices(static_cast<std::size_t>(t));
    std::iota(indices.begin(), indices.end(), 0);
    while (true) {
        visit(std::span<const int>(indices));
        int i = t - 1;
        while (i >= 0 && indices[static_cast<std::size_t>(i)] == n - t + i) --i;
        if (i < 0) break;
        ++indices[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            indices[static_cast<std::size_t>(j)] = indices[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace rgvcs
