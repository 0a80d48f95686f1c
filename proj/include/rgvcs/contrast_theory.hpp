#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rgvcs/combinatorics.hpp"
#include "rgvcs/partitions.hpp"
#include "rgvcs/rational.hpp"
#include "rgvcs/sharing.hpp"

namespace rgvcs {

enum class Engine { automatic, closed_form, enumeration };

const char* engine_name(Engine e);
Engine engine_from_name(std::string_view name);

// Base-bit index carried by each position of the initial group: identity for
// n' = k, cyclic assignment for n' > k. 1-based values in 1..k.
std::vector<int> base_index_multiset(int k, int n_prime);

// The fixed last row used throughout: (1,...,1,0,...,0) with the given weight.
std::vector<Bit> canonical_last_row(int x, int weight);

// Number of 0/1 matrices with row sums equal to lambda's parts (in order),
// last row fixed, and every column sum at least 1. Backtracking over row
// fill patterns with column-coverage pruning. The count is independent of
// which weight-matching last row is supplied.
std::int64_t compliant_matrix_count(const Partition& lambda, int x,
                                    std::span<const Bit> last_row);

// Distribution of the number of distinct base-bit indices hit when lambda_j
// share positions are selected from group j. The closed form requires
// n' = k; lambda may be any valid arrangement (the result is arrangement
// independent).
std::map<int, Rational> distinct_distribution_closed(const Partition& lambda,
                                                     const SchemeParams& params);
Rational prob_distinct_closed(const Partition& lambda, int x, const SchemeParams& params);

// Same distribution by exact enumeration of every per-group position subset;
// works for any k <= n' <= n within the state budget.
std::map<int, Rational> distinct_distribution_enumerated(
    const Partition& lambda, const SchemeParams& params,
    std::uint64_t budget = kDefaultBudget);
Rational prob_distinct_enumerated(const Partition& lambda, int x, const SchemeParams& params,
                                  std::uint64_t budget = kDefaultBudget);

// Stacking transmissions and contrast of one partition class, from the
// distinct-count distribution.
struct PartitionContrast {
    Rational t_white;  // transmission over secret-0 pixels
    Rational t_black;  // transmission over secret-1 pixels
    Rational alpha;
};
PartitionContrast partition_contrast(const Partition& lambda, int k,
                                     const std::map<int, Rational>& probs);

// Occurrence probability of the equivalence class of lambda among all
// t-subsets of the n shares. Closed form requires n' = k; the enumerated
// engine sums the selection counts over every distinct arrangement.
Rational partition_weight_closed(const Partition& lambda, int t, const SchemeParams& params);
Rational partition_weight_enumerated(const Partition& lambda, int t,
                                     const SchemeParams& params,
                                     std::uint64_t budget = kDefaultBudget);

struct ClassContrast {
    Partition partition;
    Rational alpha;
    Rational beta;
    Rational t_white;
    Rational t_black;
};

struct ContrastBreakdown {
    SchemeParams params;
    int t = 0;
    std::vector<ClassContrast> classes;  // sorted by alpha, descending
    Rational gamma;                      // expected contrast over all t-subsets
};

// Full layered-contrast analysis of the grouped scheme when stacking any t
// shadows: one entry per equivalence class with exact alpha/beta, plus the
// expected contrast.
ContrastBreakdown scheme_contrast(const SchemeParams& params, int t,
                                  Engine engine = Engine::automatic,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace rgvcs
