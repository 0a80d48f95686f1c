#include "rgvcs/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rgvcs/errors.hpp"
#include "rgvcs/random_source.hpp"

namespace rgvcs::oracle {

SimulationReport simulate_stack_transmission(const SchemeParams& params,
                                             std::span<const int> selection, Bit s,
                                             std::uint64_t trials, std::uint64_t seed,
                                             std::optional<Rational> target) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("simulate_stack_transmission: need trials >= 1");
    if (selection.empty())
        throw std::invalid_argument("simulate_stack_transmission: empty selection");
    for (int idx : selection)
        if (idx < 1 || idx > params.n)
            throw std::invalid_argument("simulate_stack_transmission: index out of range");

    std::uint64_t transparent = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        RandomSource rng(seed, trial);
        const std::vector<Bit> bits = share_pixel(s, params, rng);
        Bit stacked = 0;
        for (int idx : selection) stacked |= bits[static_cast<std::size_t>(idx - 1)];
        transparent += stacked == 0;
    }

    SimulationReport report;
    report.trials = trials;
    report.estimate = static_cast<double>(transparent) / static_cast<double>(trials);
    report.stderr_est =
        std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(trials));
    report.target = std::move(target);
    return report;
}

std::map<int, Rational> exhaustive_distinct_distribution(const Partition& lambda,
                                                         const SchemeParams& params,
                                                         std::uint64_t budget) {
    params.validate();
    if (params.variant != Variant::grouped)
        throw std::invalid_argument("exhaustive_distinct_distribution: grouped variant required");
    const int k = params.k;
    const int n_prime = params.n_prime;
    const int groups = BitGroupLayout::of(params).group_count;
    if (static_cast<int>(lambda.parts.size()) != groups)
        throw std::invalid_argument("exhaustive_distinct_distribution: wrong partition length");
    if (lambda.sum() < 1)
        throw std::invalid_argument("exhaustive_distinct_distribution: empty selection");
    if (n_prime > 30)
        throw budget_exceeded("exhaustive_distinct_distribution: group length too large");

    // Position -> base-bit index, cyclic over the first k positions.
    std::vector<std::uint32_t> value_mask(static_cast<std::size_t>(n_prime));
    for (int p = 0; p < n_prime; ++p) value_mask[static_cast<std::size_t>(p)] = 1U << (p % k);

    // Per group, every position mask of the right popcount, found by scanning
    // all 2^n' masks. Dumb on purpose.
    std::vector<std::vector<std::uint32_t>> group_choices;
    double state_estimate = 1.0;
    for (int part : lambda.parts) {
        if (part < 0 || part > n_prime)
            throw std::invalid_argument("exhaustive_distinct_distribution: part out of range");
        std::vector<std::uint32_t> choices;
        for (std::uint32_t mask = 0; mask < (1U << n_prime); ++mask)
            if (std::popcount(mask) == part) choices.push_back(mask);
        state_estimate *= static_cast<double>(choices.size());
        group_choices.push_back(std::move(choices));
    }
    if (state_estimate > static_cast<double>(budget))
        throw budget_exceeded("exhaustive_distinct_distribution: state count exceeds budget");

    // Odometer over the per-group choices.
    std::vector<std::size_t> odometer(group_choices.size(), 0);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t total = 0;
    while (true) {
        std::uint32_t union_values = 0;
        for (std::size_t g = 0; g < odometer.size(); ++g) {
            const std::uint32_t positions = group_choices[g][odometer[g]];
            for (int p = 0; p < n_prime; ++p)
                if (positions & (1U << p)) union_values |= value_mask[static_cast<std::size_t>(p)];
        }
        ++counts[static_cast<std::size_t>(std::popcount(union_values))];
        ++total;

        std::size_t g = 0;
        while (g < odometer.size() && ++odometer[g] == group_choices[g].size()) {
            odometer[g] = 0;
            ++g;
        }
        if (g == odometer.size()) break;
    }

    std::map<int, Rational> probs;
    for (int x = 1; x <= k; ++x)
        probs[x] = Rational(BigInt::from_u64(counts[static_cast<std::size_t>(x)]),
                            BigInt::from_u64(total));
    return probs;
}

std::map<Partition, Rational> exhaustive_class_weights(const SchemeParams& params, int t,
                                                       std::uint64_t budget) {
    params.validate();
    if (t < 1 || t > params.n)
        throw std::invalid_argument("exhaustive_class_weights: t must satisfy 1 <= t <= n");
    if (binomial_estimate(params.n, t) > static_cast<double>(budget))
        throw budget_exceeded("exhaustive_class_weights: C(n,t) exceeds budget");
    const BitGroupLayout layout = BitGroupLayout::of(params);

    std::map<Partition, std::uint64_t> buckets;
    std::uint64_t total = 0;
    for_each_combination(params.n, t, [&](std::span<const int> combo) {
        std::vector<int> per_group(static_cast<std::size_t>(layout.group_count), 0);
        for (int zero_based : combo)
            ++per_group[static_cast<std::size_t>(layout.group_of(zero_based + 1) - 1)];
        ++buckets[Partition(std::move(per_group)).sorted_descending()];
        ++total;
    });

    std::map<Partition, Rational> weights;
    for (const auto& [partition, count] : buckets)
        weights[partition] =
            Rational(BigInt::from_u64(count), BigInt::from_u64(total));
    return weights;
}

std::int64_t compliant_matrix_count_naive(const Partition& lambda, int x,
                                          std::span<const Bit> last_row) {
    const int rows = static_cast<int>(lambda.parts.size());
    if (rows < 1 || x < 1) throw std::invalid_argument("compliant_matrix_count_naive: bad shape");
    if (static_cast<int>(last_row.size()) != x)
        throw std::invalid_argument("compliant_matrix_count_naive: last row has wrong length");
    int last_weight = 0;
    for (Bit b : last_row) last_weight += b;
    if (last_weight != lambda.parts.back())
        throw std::invalid_argument(
            "compliant_matrix_count_naive: last row weight must equal the final part");
    const int free_bits = (rows - 1) * x;
    if (free_bits > 30)
        throw budget_exceeded("compliant_matrix_count_naive: search space too large");

    std::int64_t count = 0;
    for (std::uint64_t assignment = 0; assignment < (1ULL << free_bits); ++assignment) {
        bool ok = true;
        std::vector<int> column_sum(static_cast<std::size_t>(x), 0);
        for (int r = 0; r < rows - 1 && ok; ++r) {
            int row_sum = 0;
            for (int c = 0; c < x; ++c) {
                const int bit = static_cast<int>((assignment >> (r * x + c)) & 1U);
                row_sum += bit;
                column_sum[static_cast<std::size_t>(c)] += bit;
            }
            ok = row_sum == lambda.parts[static_cast<std::size_t>(r)];
        }
        if (!ok) continue;
        for (int c = 0; c < x; ++c)
            column_sum[static_cast<std::size_t>(c)] += last_row[static_cast<std::size_t>(c)];
        for (int c = 0; c < x && ok; ++c) ok = column_sum[static_cast<std::size_t>(c)] >= 1;
        count += ok;
    }
    return count;
}

}  // namespace rgvcs::oracle
