#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rgvcs/combinatorics.hpp"
#include "rgvcs/image.hpp"
#include "rgvcs/partitions.hpp"
#include "rgvcs/shadows.hpp"

namespace rgvcs {

// Fraction of transparent pixels.
double light_transmission(const BinaryImage& image);

struct ContrastMeasurement {
    double t_white = 0.0;  // transmission over the secret's 0-region
    double t_black = 0.0;  // transmission over the secret's 1-region
    double alpha = 0.0;    // (t_white - t_black) / (1 + t_black)
};

// Region transmissions and contrast of a recovered image against its secret.
// The secret must contain both pixel values.
ContrastMeasurement measure_contrast(const BinaryImage& secret, const BinaryImage& recovered);

struct SweepRow {
    std::vector<int> combination;  // ascending 1-based shadow indices
    Partition layer;               // descending per-group counts
    double alpha = 0.0;
};

// Measures the contrast of every t-combination of shadows, labelled with its
// partition class. Rows come out in ascending combination order.
std::vector<SweepRow> combination_sweep(const BinaryImage& secret, const ShadowSet& set, int t,
                                        std::uint64_t budget = kDefaultBudget);

// "combination;layer_partition;alpha" with hyphen-joined indices, e.g.
// "2-6-10;2+1+0;0.049068".
std::string sweep_csv(std::span<const SweepRow> rows);

std::string combination_label(std::span<const int> combination);

}  // namespace rgvcs
