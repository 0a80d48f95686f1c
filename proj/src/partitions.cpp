#include "rgvcs/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace rgvcs {

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::is_descending() const {
    return std::is_sorted(parts.rbegin(), parts.rend());
}

Partition Partition::sorted_descending() const {
    Partition p = *this;
    std::sort(p.parts.begin(), p.parts.end(), std::greater<int>());
    return p;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts[i]);
    }
    return out;
}

std::vector<Partition> valid_partitions(int t, const SchemeParams& params) {
    params.validate();
    if (t < 1 || t > params.n)
        throw std::invalid_argument("valid_partitions: t must satisfy 1 <= t <= n");
    const BitGroupLayout layout = BitGroupLayout::of(params);
    const int groups = layout.group_count;
    const int cap = params.group_len();
    const int last_size = layout.sizes.back();

    std::vector<Partition> result;
    std::vector<int> parts(static_cast<std::size_t>(groups));
    // Descending recursion; the final (smallest) part must fit the trailing
    // group for some arrangement of the class to be selectable.
    std::function<void(int, int, int)> extend = [&](int slot, int remaining, int limit) {
        if (slot == groups) {
            if (remaining == 0 && parts.back() <= last_size) result.emplace_back(parts);
            return;
        }
        const int slots_left = groups - slot;
        for (int v = std::min(limit, remaining); v >= 0; --v) {
            if (remaining - v > (slots_left - 1) * v) continue;  // descending can't finish
            parts[static_cast<std::size_t>(slot)] = v;
            extend(slot + 1, remaining - v, v);
        }
    };
    extend(0, t, cap);
    return result;
}

MultisetSignature MultisetSignature::of(const Partition& partition) {
    Partition sorted = partition.sorted_descending();
    MultisetSignature sig;
    for (int v : sorted.parts) {
        if (!sig.items.empty() && sig.items.back().first == v)
            ++sig.items.back().second;
        else
            sig.items.emplace_back(v, 1);
    }
    return sig;
}

}  // namespace rgvcs
