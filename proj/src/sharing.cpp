#include "rgvcs/sharing.hpp"

#include <stdexcept>

namespace rgvcs {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::chen_tsao: return "chen-tsao";
        case Variant::wu_sun: return "wu-sun";
        case Variant::yan: return "yan";
        case Variant::shyu: return "shyu";
        case Variant::grouped: return "grouped";
    }
    throw std::invalid_argument("variant_name: unknown variant");
}

Variant variant_from_name(std::string_view name) {
    if (name == "chen-tsao" || name == "chentsao") return Variant::chen_tsao;
    if (name == "wu-sun" || name == "wusun") return Variant::wu_sun;
    if (name == "yan") return Variant::yan;
    if (name == "shyu") return Variant::shyu;
    if (name == "grouped") return Variant::grouped;
    throw std::invalid_argument("unknown scheme variant: " + std::string(name));
}

SchemeParams SchemeParams::traditional(Variant v, int k, int n) {
    if (v == Variant::grouped)
        throw std::invalid_argument("SchemeParams::traditional: use SchemeParams::grouped");
    SchemeParams p{k, n, n, v};
    p.validate();
    return p;
}

SchemeParams SchemeParams::grouped(int k, int n_prime, int n) {
    SchemeParams p{k, n_prime, n, Variant::grouped};
    p.validate();
    return p;
}

void SchemeParams::validate() const {
    if (k < 2) throw std::invalid_argument("scheme params: k must be at least 2");
    if (variant == Variant::grouped) {
        if (n_prime < k || n < n_prime)
            throw std::invalid_argument("scheme params: need 2 <= k <= n' <= n");
    } else {
        if (n < k) throw std::invalid_argument("scheme params: need 2 <= k <= n");
    }
}

BitGroupLayout BitGroupLayout::of(const SchemeParams& params) {
    params.validate();
    const int len = params.group_len();
    BitGroupLayout layout;
    layout.group_count = (params.n + len - 1) / len;
    layout.sizes.assign(static_cast<std::size_t>(layout.group_count), len);
    layout.sizes.back() = params.n - len * (layout.group_count - 1);
    return layout;
}

int BitGroupLayout::group_of(int share_index) const {
    int remaining = share_index;
    for (int g = 0; g < group_count; ++g) {
        remaining -= sizes[static_cast<std::size_t>(g)];
        if (remaining <= 0) return g + 1;
    }
    throw std::invalid_argument("BitGroupLayout::group_of: share index out of range");
}

}  // namespace rgvcs
