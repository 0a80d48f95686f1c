#include "rgvcs/contrast_theory.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "rgvcs/errors.hpp"

namespace rgvcs {

namespace {

// Backtracking limit: the search space is 2^((rows-1)*x).
constexpr int kBacktrackBitLimit = 30;

void require_grouped(const SchemeParams& params, const char* where) {
    params.validate();
    if (params.variant != Variant::grouped)
        throw std::invalid_argument(std::string(where) + ": grouped variant required");
}

void require_closed_form(const SchemeParams& params, const char* where) {
    require_grouped(params, where);
    if (params.n_prime != params.k)
        throw std::invalid_argument(std::string(where) +
                                    ": closed form requires n' = k; use the enumeration engine");
}

// lambda must have one part per group, each within its group length, and the
// last part within the trailing group so the arrangement is selectable.
void validate_arrangement(const Partition& lambda, const SchemeParams& params,
                          const char* where) {
    const BitGroupLayout layout = BitGroupLayout::of(params);
    if (static_cast<int>(lambda.parts.size()) != layout.group_count)
        throw std::invalid_argument(std::string(where) + ": partition has wrong length");
    for (std::size_t j = 0; j < lambda.parts.size(); ++j) {
        if (lambda.parts[j] < 0 || lambda.parts[j] > params.group_len())
            throw std::invalid_argument(std::string(where) + ": part exceeds group length");
    }
    if (lambda.parts.back() > layout.sizes.back())
        throw std::invalid_argument(std::string(where) + ": last part exceeds trailing group");
    if (lambda.sum() < 1 || lambda.sum() > params.n)
        throw std::invalid_argument(std::string(where) + ": partition sum out of range");
}

Rational half_power(int g) {
    BigInt den(1);
    for (int i = 0; i < g; ++i) den = den * BigInt(2);
    return Rational(BigInt(1), den);
}

Rational prob_at(const std::map<int, Rational>& probs, int x) {
    const auto it = probs.find(x);
    return it == probs.end() ? Rational(0) : it->second;
}

}  // namespace

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::automatic: return "auto";
        case Engine::closed_form: return "closed";
        case Engine::enumeration: return "enumerated";
    }
    throw std::invalid_argument("engine_name: unknown engine");
}

Engine engine_from_name(std::string_view name) {
    if (name == "auto") return Engine::automatic;
    if (name == "closed") return Engine::closed_form;
    if (name == "enumerated" || name == "enumeration") return Engine::enumeration;
    throw std::invalid_argument("unknown engine: " + std::string(name));
}

std::vector<int> base_index_multiset(int k, int n_prime) {
    if (k < 2 || n_prime < k)
        throw std::invalid_argument("base_index_multiset: need 2 <= k <= n'");
    std::vector<int> values(static_cast<std::size_t>(n_prime));
    for (int p = 0; p < n_prime; ++p) values[static_cast<std::size_t>(p)] = p % k + 1;
    return values;
}

std::vector<Bit> canonical_last_row(int x, int weight) {
    if (x < 1 || weight < 0 || weight > x)
        throw std::invalid_argument("canonical_last_row: need 0 <= weight <= x");
    std::vector<Bit> row(static_cast<std::size_t>(x), 0);
    std::fill(row.begin(), row.begin() + weight, Bit{1});
    return row;
}

std::int64_t compliant_matrix_count(const Partition& lambda, int x,
                                    std::span<const Bit> last_row) {
    const int rows = static_cast<int>(lambda.parts.size());
    if (rows < 1) throw std::invalid_argument("compliant_matrix_count: empty partition");
    if (x < 1) throw std::invalid_argument("compliant_matrix_count: x must be positive");
    if (x > lambda.sum())
        throw std::invalid_argument("compliant_matrix_count: x exceeds the partition sum");
    if (static_cast<int>(last_row.size()) != x)
        throw std::invalid_argument("compliant_matrix_count: last row has wrong length");
    int weight = 0;
    for (Bit b : last_row) {
        if (b > 1) throw std::invalid_argument("compliant_matrix_count: last row must be binary");
        weight += b;
    }
    if (weight != lambda.parts.back())
        throw std::invalid_argument(
            "compliant_matrix_count: last row weight must equal the final part");
    if (static_cast<std::int64_t>(rows - 1) * x > kBacktrackBitLimit)
        throw budget_exceeded("compliant_matrix_count: (rows-1)*x exceeds the search limit");

    std::uint32_t base_mask = 0;
    for (int c = 0; c < x; ++c)
        if (last_row[static_cast<std::size_t>(c)]) base_mask |= 1U << c;

    // capacity[r] = ones still placeable in rows r..rows-2.
    std::vector<int> capacity(static_cast<std::size_t>(rows), 0);
    for (int r = rows - 2; r >= 0; --r)
        capacity[static_cast<std::size_t>(r)] =
            capacity[static_cast<std::size_t>(r + 1)] + lambda.parts[static_cast<std::size_t>(r)];

    std::int64_t count = 0;
    std::function<void(int, std::uint32_t)> fill_row = [&](int r, std::uint32_t covered) {
        const int uncovered = x - std::popcount(covered);
        if (uncovered > capacity[static_cast<std::size_t>(r)]) return;
        if (r == rows - 1) {
            ++count;
            return;
        }
        const int want = lambda.parts[static_cast<std::size_t>(r)];
        if (want > x) return;
        // Enumerate the weight-`want` fill patterns of this row.
        std::function<void(int, int, std::uint32_t)> pick = [&](int next, int left,
                                                                std::uint32_t mask) {
            if (left == 0) {
                fill_row(r + 1, covered | mask);
                return;
            }
            if (x - next < left) return;
            for (int c = next; c <= x - left; ++c) pick(c + 1, left - 1, mask | (1U << c));
        };
        pick(0, want, 0);
    };
    fill_row(0, base_mask);
    return count;
}

std::map<int, Rational> distinct_distribution_closed(const Partition& lambda,
                                                     const SchemeParams& params) {
    require_closed_form(params, "distinct_distribution_closed");
    validate_arrangement(lambda, params, "distinct_distribution_closed");
    const int k = params.k;
    const int last = lambda.parts.back();

    BigInt denom(1);
    for (std::size_t j = 0; j + 1 < lambda.parts.size(); ++j)
        denom = denom * big_binomial(k, lambda.parts[j]);

    std::map<int, Rational> probs;
    Rational total(0);
    for (int x = 1; x <= k; ++x) {
        Rational p(0);
        if (x >= last && x <= lambda.sum()) {
            const std::int64_t matrices =
                compliant_matrix_count(lambda, x, canonical_last_row(x, last));
            p = Rational(big_binomial(k - last, x - last) * BigInt(matrices), denom);
        }
        probs[x] = p;
        total += p;
    }
    if (total != Rational(1))
        throw std::logic_error("distinct_distribution_closed: distribution does not sum to 1");
    return probs;
}

Rational prob_distinct_closed(const Partition& lambda, int x, const SchemeParams& params) {
    const auto probs = distinct_distribution_closed(lambda, params);
    if (x < 1 || x > params.k)
        throw std::invalid_argument("prob_distinct_closed: x must satisfy 1 <= x <= k");
    return probs.at(x);
}

std::map<int, Rational> distinct_distribution_enumerated(const Partition& lambda,
                                                         const SchemeParams& params,
                                                         std::uint64_t budget) {
    require_grouped(params, "distinct_distribution_enumerated");
    validate_arrangement(lambda, params, "distinct_distribution_enumerated");
    const int k = params.k;
    const int n_prime = params.n_prime;

    double estimated = 1.0;
    for (int part : lambda.parts) estimated *= binomial_estimate(n_prime, part);
    if (estimated > static_cast<double>(budget))
        throw budget_exceeded("distinct_distribution_enumerated: state count " +
                              std::to_string(estimated) + " exceeds budget " +
                              std::to_string(budget));

    const std::vector<int> values = base_index_multiset(k, n_prime);
    std::vector<std::uint32_t> position_mask(static_cast<std::size_t>(n_prime));
    for (int p = 0; p < n_prime; ++p)
        position_mask[static_cast<std::size_t>(p)] =
            1U << (values[static_cast<std::size_t>(p)] - 1);

    // The union masks reachable by one group's subset choice, per part size.
    std::map<int, std::vector<std::uint32_t>> subset_masks;
    for (int part : lambda.parts) {
        if (subset_masks.contains(part)) continue;
        auto& masks = subset_masks[part];
        for_each_combination(n_prime, part, [&](std::span<const int> positions) {
            std::uint32_t m = 0;
            for (int p : positions) m |= position_mask[static_cast<std::size_t>(p)];
            masks.push_back(m);
        });
    }

    std::uint64_t total = 0;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(k) + 1, 0);
    std::function<void(std::size_t, std::uint32_t)> descend = [&](std::size_t group,
                                                                  std::uint32_t mask) {
        if (group == lambda.parts.size()) {
            ++counts[static_cast<std::size_t>(std::popcount(mask))];
            ++total;
            return;
        }
        for (std::uint32_t m : subset_masks.at(lambda.parts[group])) descend(group + 1, mask | m);
    };
    descend(0, 0);

    std::map<int, Rational> probs;
    for (int x = 1; x <= k; ++x)
        probs[x] = Rational(BigInt::from_u64(counts[static_cast<std::size_t>(x)]),
                            BigInt::from_u64(total));
    return probs;
}

Rational prob_distinct_enumerated(const Partition& lambda, int x, const SchemeParams& params,
                                  std::uint64_t budget) {
    const auto probs = distinct_distribution_enumerated(lambda, params, budget);
    if (x < 1 || x > params.k)
        throw std::invalid_argument("prob_distinct_enumerated: x must satisfy 1 <= x <= k");
    return probs.at(x);
}

PartitionContrast partition_contrast(const Partition& lambda, int k,
                                     const std::map<int, Rational>& probs) {
    if (k < 2) throw std::invalid_argument("partition_contrast: k must be at least 2");
    Rational total(0);
    for (const auto& [x, p] : probs) {
        if (x < 1 || x > k)
            throw std::invalid_argument("partition_contrast: probability key outside 1..k for " +
                                        lambda.to_string());
        total += p;
    }
    if (total != Rational(1))
        throw std::invalid_argument("partition_contrast: probabilities for " + lambda.to_string() +
                                    " do not sum to 1");

    Rational below;  // stacking fewer than k distinct bits transmits alike for both secrets
    for (int g = 1; g < k; ++g) below += prob_at(probs, g) * half_power(g);
    const Rational top = prob_at(probs, k) * half_power(k - 1);

    PartitionContrast pc;
    pc.t_black = below;
    pc.t_white = top + below;
    pc.alpha = top / (Rational(1) + below);
    return pc;
}

Rational partition_weight_closed(const Partition& lambda, int t, const SchemeParams& params) {
    require_closed_form(params, "partition_weight_closed");
    validate_arrangement(lambda.sorted_descending(), params, "partition_weight_closed");
    if (lambda.sum() != t)
        throw std::invalid_argument("partition_weight_closed: t must equal the partition sum");
    const BitGroupLayout layout = BitGroupLayout::of(params);
    const int group_count = layout.group_count;
    const int last_size = layout.sizes.back();
    const int k = params.k;

    const MultisetSignature sig = MultisetSignature::of(lambda);
    const BigInt head_factorial = big_factorial(group_count - 1);

    BigInt numerator(0);
    for (std::size_t g = 0; g < sig.items.size(); ++g) {
        const int value = sig.items[g].first;
        // Ways when the trailing group contributes `value` shadows; zero when
        // it cannot hold that many.
        BigInt term = big_binomial(last_size, value);
        if (term.is_zero()) continue;
        BigInt arrangements = head_factorial;
        for (std::size_t j = 0; j < sig.items.size(); ++j) {
            const int multiplicity = sig.items[j].second - (j == g ? 1 : 0);
            arrangements = arrangements / big_factorial(multiplicity);
            for (int i = 0; i < multiplicity; ++i) term = term * big_binomial(k, sig.items[j].first);
        }
        numerator += term * arrangements;
    }
    return Rational(numerator, big_binomial(params.n, t));
}

Rational partition_weight_enumerated(const Partition& lambda, int t, const SchemeParams& params,
                                     std::uint64_t budget) {
    require_grouped(params, "partition_weight_enumerated");
    validate_arrangement(lambda.sorted_descending(), params, "partition_weight_enumerated");
    if (lambda.sum() != t)
        throw std::invalid_argument("partition_weight_enumerated: t must equal the partition sum");
    if (binomial_estimate(params.n, t) > static_cast<double>(budget))
        throw budget_exceeded("partition_weight_enumerated: C(n,t) exceeds budget");
    const BitGroupLayout layout = BitGroupLayout::of(params);

    // Count the t-subsets landing in this class: sum the per-group selection
    // counts over every distinct arrangement of the parts.
    std::vector<int> arrangement = lambda.parts;
    std::sort(arrangement.begin(), arrangement.end());
    BigInt numerator(0);
    do {
        BigInt ways(1);
        for (int j = 0; j < layout.group_count; ++j)
            ways = ways * big_binomial(layout.sizes[static_cast<std::size_t>(j)],
                                       arrangement[static_cast<std::size_t>(j)]);
        numerator += ways;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return Rational(numerator, big_binomial(params.n, t));
}

ContrastBreakdown scheme_contrast(const SchemeParams& params, int t, Engine engine,
                                  std::uint64_t budget) {
    require_grouped(params, "scheme_contrast");
    if (t < 1 || t > params.n)
        throw std::invalid_argument("scheme_contrast: t must satisfy 1 <= t <= n");
    if (engine == Engine::automatic)
        engine = params.n_prime == params.k ? Engine::closed_form : Engine::enumeration;
    if (engine == Engine::closed_form && params.n_prime != params.k)
        throw std::invalid_argument("scheme_contrast: closed form requires n' = k");
    const bool closed = engine == Engine::closed_form;

    ContrastBreakdown breakdown;
    breakdown.params = params;
    breakdown.t = t;

    Rational beta_total(0);
    for (const Partition& lambda : valid_partitions(t, params)) {
        const auto probs = closed ? distinct_distribution_closed(lambda, params)
                                  : distinct_distribution_enumerated(lambda, params, budget);
        const PartitionContrast pc = partition_contrast(lambda, params.k, probs);
        const Rational beta = closed ? partition_weight_closed(lambda, t, params)
                                     : partition_weight_enumerated(lambda, t, params, budget);
        breakdown.classes.push_back({lambda, pc.alpha, beta, pc.t_white, pc.t_black});
        beta_total += beta;
    }
    if (beta_total != Rational(1))
        throw std::logic_error("scheme_contrast: class weights do not sum to 1");

    std::stable_sort(breakdown.classes.begin(), breakdown.classes.end(),
                     [](const ClassContrast& a, const ClassContrast& b) { return a.alpha > b.alpha; });
    for (const ClassContrast& c : breakdown.classes) breakdown.gamma += c.alpha * c.beta;
    return breakdown;
}

}  // namespace rgvcs
