#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "rgvcs/combinatorics.hpp"
#include "rgvcs/partitions.hpp"
#include "rgvcs/rational.hpp"
#include "rgvcs/sharing.hpp"

// Brute-force and Monte-Carlo checks, written independently of the contrast
// engine: everything here works from first principles (subset iteration and
// the sharing primitives), so an agreement with the closed forms is evidence,
// not tautology.
namespace rgvcs::oracle {

struct SimulationReport {
    std::uint64_t trials = 0;
    double estimate = 0.0;
    double stderr_est = 0.0;  // sqrt(p(1-p)/trials)
    std::optional<Rational> target;
};

// Estimates the probability that the OR of the selected share positions is
// transparent, by repeatedly sharing a pixel of value s. Selection indices
// are 1-based share positions.
SimulationReport simulate_stack_transmission(const SchemeParams& params,
                                             std::span<const int> selection, Bit s,
                                             std::uint64_t trials, std::uint64_t seed,
                                             std::optional<Rational> target = std::nullopt);

// Exact distribution of the number of distinct base-bit indices selected
// under lambda, by iterating every combination of per-group position subsets.
std::map<int, Rational> exhaustive_distinct_distribution(
    const Partition& lambda, const SchemeParams& params,
    std::uint64_t budget = kDefaultBudget);

// Exact class weights by iterating all C(n,t) share subsets and bucketing
// them by their descending per-group counts.
std::map<Partition, Rational> exhaustive_class_weights(const SchemeParams& params, int t,
                                                       std::uint64_t budget = kDefaultBudget);

// Compliant-matrix count by scanning all 2^((rows-1)*x) fill patterns.
std::int64_t compliant_matrix_count_naive(const Partition& lambda, int x,
                                          std::span<const Bit> last_row);

}  // namespace rgvcs::oracle
