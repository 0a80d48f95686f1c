#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

#include "rgvcs/contrast_theory.hpp"
#include "rgvcs/errors.hpp"

using namespace rgvcs;

namespace {

Rational frac(long long num, long long den) { return Rational::of(num, den); }

std::int64_t count_with_canonical_row(const std::vector<int>& parts, int x) {
    const Partition lambda{parts};
    return compliant_matrix_count(lambda, x, canonical_last_row(x, parts.back()));
}

}  // namespace

TEST_CASE("compliant matrix counts of the three-group worked example") {
    CHECK(count_with_canonical_row({3, 0, 0}, 3) == 1);
    CHECK(count_with_canonical_row({2, 1, 0}, 2) == 2);
    CHECK(count_with_canonical_row({2, 1, 0}, 3) == 3);
    CHECK(count_with_canonical_row({1, 1, 1}, 1) == 1);
    CHECK(count_with_canonical_row({1, 1, 1}, 2) == 3);
    CHECK(count_with_canonical_row({1, 1, 1}, 3) == 2);
}

TEST_CASE("compliant matrix counts of the two-group tables") {
    // k=3, n=5
    CHECK(count_with_canonical_row({3, 0}, 3) == 1);
    CHECK(count_with_canonical_row({2, 1}, 2) == 1);
    CHECK(count_with_canonical_row({2, 1}, 3) == 1);
    CHECK(count_with_canonical_row({3, 1}, 3) == 1);
    CHECK(count_with_canonical_row({2, 2}, 2) == 1);
    CHECK(count_with_canonical_row({2, 2}, 3) == 2);
    CHECK(count_with_canonical_row({3, 2}, 3) == 1);
    // k=4, n=5
    CHECK(count_with_canonical_row({4, 0}, 4) == 1);
    CHECK(count_with_canonical_row({3, 1}, 4) == 1);
    CHECK(count_with_canonical_row({4, 1}, 4) == 1);
}

TEST_CASE("compliant matrix count is independent of the fixed last row") {
    for (const auto& parts : std::vector<std::vector<int>>{{2, 1, 0}, {1, 1, 1}, {2, 2}, {3, 1}}) {
        const Partition lambda{std::vector<int>(parts)};
        const int weight = parts.back();
        for (int x = std::max(1, weight); x <= std::min(4, lambda.sum()); ++x) {
            const std::int64_t expected =
                compliant_matrix_count(lambda, x, canonical_last_row(x, weight));
            // Every weight-matching last row yields the same count.
            for (unsigned mask = 0; mask < (1U << x); ++mask) {
                if (std::popcount(mask) != weight) continue;
                std::vector<Bit> row(static_cast<std::size_t>(x));
                for (int c = 0; c < x; ++c) row[static_cast<std::size_t>(c)] = (mask >> c) & 1U;
                CHECK(compliant_matrix_count(lambda, x, row) == expected);
            }
        }
    }
}

TEST_CASE("compliant matrix count rejects malformed input") {
    const Partition lambda({2, 1, 0});
    CHECK_THROWS_AS(compliant_matrix_count(lambda, 2, canonical_last_row(2, 1)),
                    std::invalid_argument);  // weight mismatch
    CHECK_THROWS_AS(compliant_matrix_count(lambda, 4, canonical_last_row(4, 0)),
                    std::invalid_argument);  // x exceeds the partition sum
    const Partition wide({8, 8, 8, 8});
    CHECK_THROWS_AS(compliant_matrix_count(wide, 12, canonical_last_row(12, 8)),
                    budget_exceeded);  // (rows-1)*x above the search limit
}

TEST_CASE("closed-form distinct distribution reproduces the worked example") {
    const SchemeParams params = SchemeParams::grouped(3, 3, 7);
    CHECK(prob_distinct_closed(Partition({3, 0, 0}), 3, params) == Rational(1));
    CHECK(prob_distinct_closed(Partition({2, 1, 0}), 2, params) == frac(2, 3));
    CHECK(prob_distinct_closed(Partition({2, 1, 0}), 3, params) == frac(1, 3));
    CHECK(prob_distinct_closed(Partition({1, 1, 1}), 1, params) == frac(1, 9));
    CHECK(prob_distinct_closed(Partition({1, 1, 1}), 2, params) == frac(2, 3));
    CHECK(prob_distinct_closed(Partition({1, 1, 1}), 3, params) == frac(2, 9));
}

TEST_CASE("closed-form distinct distribution reproduces the two-group tables") {
    const SchemeParams k3n5 = SchemeParams::grouped(3, 3, 5);
    CHECK(prob_distinct_closed(Partition({3, 0}), 3, k3n5) == Rational(1));
    CHECK(prob_distinct_closed(Partition({2, 1}), 2, k3n5) == frac(2, 3));
    CHECK(prob_distinct_closed(Partition({2, 1}), 3, k3n5) == frac(1, 3));
    CHECK(prob_distinct_closed(Partition({3, 1}), 3, k3n5) == Rational(1));
    CHECK(prob_distinct_closed(Partition({2, 2}), 2, k3n5) == frac(1, 3));
    CHECK(prob_distinct_closed(Partition({2, 2}), 3, k3n5) == frac(2, 3));
    CHECK(prob_distinct_closed(Partition({3, 2}), 3, k3n5) == Rational(1));

    const SchemeParams k4n5 = SchemeParams::grouped(4, 4, 5);
    CHECK(prob_distinct_closed(Partition({4, 0}), 4, k4n5) == Rational(1));
    CHECK(prob_distinct_closed(Partition({3, 1}), 3, k4n5) == frac(3, 4));
    CHECK(prob_distinct_closed(Partition({3, 1}), 4, k4n5) == frac(1, 4));
    CHECK(prob_distinct_closed(Partition({4, 1}), 4, k4n5) == Rational(1));
}

TEST_CASE("closed form requires n' = k") {
    const SchemeParams params = SchemeParams::grouped(3, 5, 12);
    CHECK_THROWS_AS(prob_distinct_closed(Partition({3, 0, 0}), 3, params), std::invalid_argument);
    CHECK_THROWS_AS(partition_weight_closed(Partition({3, 0, 0}), 3, params),
                    std::invalid_argument);
    CHECK_THROWS_AS(scheme_contrast(params, 3, Engine::closed_form), std::invalid_argument);
}

TEST_CASE("enumerated engine matches the closed form when n' = k") {
    for (int k = 2; k <= 4; ++k) {
        for (int n = k; n <= 10; ++n) {
            const SchemeParams params = SchemeParams::grouped(k, k, n);
            for (int t = 1; t <= n; ++t) {
                for (const Partition& lambda : valid_partitions(t, params)) {
                    CHECK(distinct_distribution_closed(lambda, params) ==
                          distinct_distribution_enumerated(lambda, params));
                    CHECK(partition_weight_closed(lambda, t, params) ==
                          partition_weight_enumerated(lambda, t, params));
                }
            }
        }
    }
}

TEST_CASE("distinct distribution is invariant under valid rearrangements") {
    const SchemeParams params = SchemeParams::grouped(3, 3, 7);
    const std::map<int, Rational> reference =
        distinct_distribution_closed(Partition({2, 1, 0}), params);
    for (std::vector<int> arrangement :
         {std::vector<int>{2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}}) {
        const Partition lambda{std::move(arrangement)};
        CHECK(distinct_distribution_closed(lambda, params) == reference);
        CHECK(distinct_distribution_enumerated(lambda, params) == reference);
    }
    // (0,1,2) puts 2 selections into the single trailing share: not valid.
    CHECK_THROWS_AS(distinct_distribution_closed(Partition({0, 1, 2}), params),
                    std::invalid_argument);
}

TEST_CASE("partition contrast implements the layered transmission formulas") {
    const Partition lambda({2, 1, 0});
    std::map<int, Rational> probs{{1, Rational(0)}, {2, frac(2, 3)}, {3, frac(1, 3)}};
    const PartitionContrast pc = partition_contrast(lambda, 3, probs);
    CHECK(pc.t_black == frac(1, 6));
    CHECK(pc.t_white == frac(1, 6) + frac(1, 12));
    CHECK(pc.alpha == frac(1, 14));

    std::map<int, Rational> total_mass{{3, Rational(1)}};
    CHECK(partition_contrast(Partition({3, 0, 0}), 3, total_mass).alpha == frac(1, 4));

    std::map<int, Rational> not_normalized{{2, frac(1, 2)}};
    CHECK_THROWS_AS(partition_contrast(lambda, 3, not_normalized), std::invalid_argument);
}

TEST_CASE("class weights of the worked example and tables") {
    const SchemeParams k3n7 = SchemeParams::grouped(3, 3, 7);
    CHECK(partition_weight_closed(Partition({3, 0, 0}), 3, k3n7) == frac(2, 35));
    CHECK(partition_weight_closed(Partition({2, 1, 0}), 3, k3n7) == frac(24, 35));
    CHECK(partition_weight_closed(Partition({1, 1, 1}), 3, k3n7) == frac(9, 35));

    const SchemeParams k3n5 = SchemeParams::grouped(3, 3, 5);
    CHECK(partition_weight_closed(Partition({3, 0}), 3, k3n5) == frac(1, 10));
    CHECK(partition_weight_closed(Partition({2, 1}), 3, k3n5) == frac(9, 10));
    CHECK(partition_weight_closed(Partition({3, 1}), 4, k3n5) == frac(2, 5));
    CHECK(partition_weight_closed(Partition({2, 2}), 4, k3n5) == frac(3, 5));
    CHECK(partition_weight_closed(Partition({3, 2}), 5, k3n5) == Rational(1));

    CHECK_THROWS_AS(partition_weight_closed(Partition({2, 1}), 4, k3n5), std::invalid_argument);
}

TEST_CASE("scheme contrast: worked example, degenerate cases, ordering") {
    const ContrastBreakdown b = scheme_contrast(SchemeParams::grouped(3, 3, 7), 3);
    REQUIRE(b.classes.size() == 3);
    CHECK(b.classes[0].partition.parts == std::vector<int>{3, 0, 0});
    CHECK(b.classes[0].alpha == frac(1, 4));
    CHECK(b.classes[1].alpha == frac(1, 14));
    CHECK(b.classes[2].alpha == frac(1, 22));
    CHECK(b.classes[0].beta == frac(2, 35));
    CHECK(b.classes[1].beta == frac(24, 35));
    CHECK(b.classes[2].beta == frac(9, 35));
    CHECK(b.gamma == frac(202, 2695));
    CHECK(std::is_sorted(b.classes.begin(), b.classes.end(),
                         [](const ClassContrast& x, const ClassContrast& y) {
                             return x.alpha > y.alpha;
                         }));

    // Below threshold: all layers are blind.
    const ContrastBreakdown blind = scheme_contrast(SchemeParams::grouped(3, 3, 7), 2);
    CHECK(blind.gamma == Rational(0));
    for (const ClassContrast& c : blind.classes) CHECK(c.alpha == Rational(0));

    // Single group: the scheme is plain k-out-of-k.
    CHECK(scheme_contrast(SchemeParams::grouped(4, 4, 4), 4).gamma == frac(1, 8));
}

TEST_CASE("scheme contrast for a longer initial group") {
    const ContrastBreakdown b =
        scheme_contrast(SchemeParams::grouped(3, 5, 12), 3, Engine::enumeration);
    REQUIRE(b.classes.size() == 3);
    CHECK(b.classes[0].alpha == frac(2, 23));
    CHECK(b.classes[1].alpha == frac(6, 121));
    CHECK(b.classes[2].alpha == frac(4, 103));
    CHECK(b.classes[0].beta == frac(20, 220));
    CHECK(b.classes[1].beta == frac(150, 220));
    CHECK(b.classes[2].beta == frac(50, 220));
    Rational beta_sum(0);
    for (const ClassContrast& c : b.classes) beta_sum += c.beta;
    CHECK(beta_sum == Rational(1));
}

TEST_CASE("budgets cap the enumeration engines") {
    const SchemeParams params = SchemeParams::grouped(3, 5, 12);
    CHECK_THROWS_AS(distinct_distribution_enumerated(Partition({3, 3, 2}), params, 10),
                    budget_exceeded);
    CHECK_THROWS_AS(partition_weight_enumerated(Partition({3, 0, 0}), 3, params, 10),
                    budget_exceeded);
    CHECK_THROWS_AS(scheme_contrast(params, 3, Engine::enumeration, 10), budget_exceeded);
    CHECK_NOTHROW(scheme_contrast(params, 3, Engine::enumeration));
}

TEST_CASE("the scheme is valid: blind below threshold, visible at and above") {
    for (int k = 2; k <= 4; ++k) {
        for (int n = k; n <= 10; ++n) {
            for (int n_prime = k; n_prime <= n; ++n_prime) {
                const SchemeParams params = SchemeParams::grouped(k, n_prime, n);
                for (int t = 1; t <= n; ++t) {
                    const Rational gamma = scheme_contrast(params, t).gamma;
                    if (t < k)
                        CHECK(gamma == Rational(0));
                    else
                        CHECK(gamma > Rational(0));
                }
            }
        }
    }
}

TEST_CASE("at t=k the intra-group class has the best contrast") {
    for (int k = 2; k <= 5; ++k) {
        for (int n = k; n <= 12; ++n) {
            const SchemeParams params = SchemeParams::grouped(k, k, n);
            const ContrastBreakdown b = scheme_contrast(params, k);
            std::vector<int> intra(static_cast<std::size_t>(b.classes[0].partition.parts.size()), 0);
            intra[0] = k;
            CHECK(b.classes[0].partition.parts == intra);
            for (std::size_t i = 1; i < b.classes.size(); ++i)
                CHECK(b.classes[0].alpha > b.classes[i].alpha);
        }
    }
}

TEST_CASE("engine name round trip") {
    CHECK(engine_from_name("auto") == Engine::automatic);
    CHECK(engine_from_name("closed") == Engine::closed_form);
    CHECK(engine_from_name("enumerated") == Engine::enumeration);
    CHECK_THROWS_AS(engine_from_name("guess"), std::invalid_argument);
}

TEST_CASE("base index multiset is cyclic") {
    CHECK(base_index_multiset(3, 3) == std::vector<int>{1, 2, 3});
    CHECK(base_index_multiset(3, 5) == std::vector<int>{1, 2, 3, 1, 2});
    CHECK(base_index_multiset(2, 5) == std::vector<int>{1, 2, 1, 2, 1});
}
