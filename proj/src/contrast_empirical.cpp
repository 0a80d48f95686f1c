#include "rgvcs/contrast_empirical.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "rgvcs/errors.hpp"

namespace rgvcs {

double light_transmission(const BinaryImage& image) {
    if (image.pixel_count() == 0) throw std::invalid_argument("light_transmission: empty image");
    std::int64_t transparent = 0;
    for (Bit b : image.pixels()) transparent += b == 0;
    return static_cast<double>(transparent) / static_cast<double>(image.pixel_count());
}

ContrastMeasurement measure_contrast(const BinaryImage& secret, const BinaryImage& recovered) {
    if (secret.height() != recovered.height() || secret.width() != recovered.width())
        throw std::invalid_argument("measure_contrast: dimension mismatch");
    std::int64_t white_total = 0, white_transparent = 0;
    std::int64_t black_total = 0, black_transparent = 0;
    const auto s = secret.pixels();
    const auto r = recovered.pixels();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) {
            ++white_total;
            white_transparent += r[i] == 0;
        } else {
            ++black_total;
            black_transparent += r[i] == 0;
        }
    }
    if (white_total == 0 || black_total == 0)
        throw std::invalid_argument("measure_contrast: secret must contain both pixel values");

    ContrastMeasurement m;
    m.t_white = static_cast<double>(white_transparent) / static_cast<double>(white_total);
    m.t_black = static_cast<double>(black_transparent) / static_cast<double>(black_total);
    m.alpha = (m.t_white - m.t_black) / (1.0 + m.t_black);
    return m;
}

std::vector<SweepRow> combination_sweep(const BinaryImage& secret, const ShadowSet& set, int t,
                                        std::uint64_t budget) {
    const int n = static_cast<int>(set.shadows.size());
    if (t < 1 || t > n) throw std::invalid_argument("combination_sweep: t must satisfy 1 <= t <= n");
    if (binomial_estimate(n, t) > static_cast<double>(budget))
        throw budget_exceeded("combination_sweep: C(n,t) exceeds budget");

    std::vector<SweepRow> rows;
    for_each_combination(n, t, [&](std::span<const int> combo) {
        SweepRow row;
        row.combination.reserve(combo.size());
        std::vector<int> per_group(static_cast<std::size_t>(set.layout.group_count), 0);
        for (int zero_based : combo) {
            row.combination.push_back(zero_based + 1);
            ++per_group[static_cast<std::size_t>(set.layout.group_of(zero_based + 1) - 1)];
        }
        row.layer = Partition(std::move(per_group)).sorted_descending();
        row.alpha = measure_contrast(secret, recover_image(set, row.combination)).alpha;
        rows.push_back(std::move(row));
    });
    return rows;
}

std::string combination_label(std::span<const int> combination) {
    std::string label;
    for (std::size_t i = 0; i < combination.size(); ++i) {
        if (i) label += '-';
        label += std::to_string(combination[i]);
    }
    return label;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::string out = "combination;layer_partition;alpha\n";
    char buffer[32];
    for (const SweepRow& row : rows) {
        std::snprintf(buffer, sizeof buffer, "%.6f", row.alpha);
        out += combination_label(row.combination);
        out += ';';
        out += row.layer.to_string();
        out += ';';
        out += buffer;
        out += '\n';
    }
    return out;
}

}  // namespace rgvcs
