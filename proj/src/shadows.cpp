#include "rgvcs/shadows.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rgvcs/errors.hpp"
#include "rgvcs/random_source.hpp"

namespace rgvcs {

namespace {

std::uint64_t pixel_stream(int row, int col) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(row)) << 32) |
           static_cast<std::uint32_t>(col);
}

void share_rows(const BinaryImage& secret, const SchemeParams& params, std::uint64_t seed,
                int row_begin, int row_end, std::vector<BinaryImage>& shadows) {
    const int n = params.n;
    for (int r = row_begin; r < row_end; ++r) {
        for (int c = 0; c < secret.width(); ++c) {
            RandomSource rng(seed, pixel_stream(r, c));
            const std::vector<Bit> bits = share_pixel(secret.at(r, c), params, rng);
            for (int i = 0; i < n; ++i)
                shadows[static_cast<std::size_t>(i)].set(r, c, bits[static_cast<std::size_t>(i)]);
        }
    }
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) {
            parts.emplace_back(text.substr(start));
            break;
        }
        parts.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw io_error(std::string("manifest: bad ") + what + " value '" + std::string(text) + "'");
    return value;
}

}  // namespace

ShadowSet share_image(const BinaryImage& secret, const SchemeParams& params,
                      std::uint64_t seed, int threads) {
    params.validate();
    if (secret.pixel_count() == 0) throw std::invalid_argument("share_image: empty secret");
    for (Bit b : secret.pixels())
        if (b > 1) throw std::invalid_argument("share_image: secret must be strictly binary");

    ShadowSet set;
    set.params = params;
    set.layout = BitGroupLayout::of(params);
    set.shadows.assign(static_cast<std::size_t>(params.n),
                       BinaryImage(secret.height(), secret.width()));

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, secret.height()));

    if (threads == 1) {
        share_rows(secret, params, seed, 0, secret.height(), set.shadows);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(threads));
        const int rows_per = (secret.height() + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const int begin = w * rows_per;
            const int end = std::min(secret.height(), begin + rows_per);
            if (begin >= end) break;
            workers.emplace_back([&, begin, end] {
                share_rows(secret, params, seed, begin, end, set.shadows);
            });
        }
        for (auto& worker : workers) worker.join();
    }
    return set;
}

BinaryImage recover_image(std::span<const BinaryImage> shadows) {
    if (shadows.empty()) throw std::invalid_argument("recover_image: no shadows selected");
    BinaryImage out = shadows[0];
    for (std::size_t i = 1; i < shadows.size(); ++i) {
        if (shadows[i].height() != out.height() || shadows[i].width() != out.width())
            throw std::invalid_argument("recover_image: shadow dimensions differ");
        auto dst = out.pixels();
        auto src = shadows[i].pixels();
        for (std::size_t p = 0; p < dst.size(); ++p) dst[p] |= src[p];
    }
    return out;
}

BinaryImage recover_image(const ShadowSet& set, std::span<const int> indices) {
    if (indices.empty()) throw std::invalid_argument("recover_image: no shadows selected");
    std::vector<const BinaryImage*> picked;
    picked.reserve(indices.size());
    for (int idx : indices) {
        if (idx < 1 || idx > static_cast<int>(set.shadows.size()))
            throw std::invalid_argument("recover_image: shadow index out of range");
        picked.push_back(&set.shadows[static_cast<std::size_t>(idx - 1)]);
    }
    BinaryImage out = *picked[0];
    for (std::size_t i = 1; i < picked.size(); ++i) {
        auto dst = out.pixels();
        auto src = picked[i]->pixels();
        for (std::size_t p = 0; p < dst.size(); ++p) dst[p] |= src[p];
    }
    return out;
}

std::string shadow_filename(int index) { return "sc_" + std::to_string(index) + ".pbm"; }

ShareManifest ShareManifest::describe(const ShadowSet& set, std::uint64_t seed) {
    ShareManifest m;
    m.params = set.params;
    m.seed = seed;
    m.height = set.shadows.empty() ? 0 : set.shadows[0].height();
    m.width = set.shadows.empty() ? 0 : set.shadows[0].width();
    for (int i = 1; i <= set.params.n; ++i) {
        m.shadow_files.push_back(shadow_filename(i));
        m.groups.push_back(set.layout.group_of(i));
    }
    return m;
}

std::string ShareManifest::to_text() const {
    std::ostringstream out;
    out << "version=" << version << '\n';
    out << "scheme=" << variant_name(params.variant) << '\n';
    out << "k=" << params.k << '\n';
    out << "nprime=" << params.group_len() << '\n';
    out << "n=" << params.n << '\n';
    out << "seed=" << seed << '\n';
    out << "height=" << height << '\n';
    out << "width=" << width << '\n';
    out << "shadows=";
    for (std::size_t i = 0; i < shadow_files.size(); ++i)
        out << (i ? "," : "") << shadow_files[i];
    out << '\n';
    out << "groups=";
    for (std::size_t i = 0; i < groups.size(); ++i) out << (i ? "," : "") << groups[i];
    out << '\n';
    return std::move(out).str();
}

ShareManifest ShareManifest::parse(std::string_view text) {
    ShareManifest m;
    bool saw_scheme = false, saw_k = false, saw_nprime = false, saw_n = false;
    int nprime = 0;
    for (std::string_view line : split(text, '\n')) {
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw io_error("manifest: malformed line");
        const std::string_view key = line.substr(0, eq);
        const std::string_view value = line.substr(eq + 1);
        if (key == "version") {
            m.version = parse_number<int>(value, "version");
        } else if (key == "scheme") {
            try {
                m.params.variant = variant_from_name(value);
            } catch (const std::invalid_argument& e) {
                throw io_error(std::string("manifest: ") + e.what());
            }
            saw_scheme = true;
        } else if (key == "k") {
            m.params.k = parse_number<int>(value, "k");
            saw_k = true;
        } else if (key == "nprime") {
            nprime = parse_number<int>(value, "nprime");
            saw_nprime = true;
        } else if (key == "n") {
            m.params.n = parse_number<int>(value, "n");
            saw_n = true;
        } else if (key == "seed") {
            m.seed = parse_number<std::uint64_t>(value, "seed");
        } else if (key == "height") {
            m.height = parse_number<int>(value, "height");
        } else if (key == "width") {
            m.width = parse_number<int>(value, "width");
        } else if (key == "shadows") {
            m.shadow_files = split(value, ',');
        } else if (key == "groups") {
            for (const std::string& g : split(value, ','))
                m.groups.push_back(parse_number<int>(g, "groups"));
        }
        // Unknown keys are ignored for forward compatibility.
    }
    if (!saw_scheme || !saw_k || !saw_n || !saw_nprime)
        throw io_error("manifest: missing scheme/k/nprime/n");
    m.params.n_prime = m.params.variant == Variant::grouped ? nprime : m.params.n;
    try {
        m.params.validate();
    } catch (const std::invalid_argument& e) {
        throw io_error(std::string("manifest: ") + e.what());
    }
    if (static_cast<int>(m.shadow_files.size()) != m.params.n ||
        static_cast<int>(m.groups.size()) != m.params.n)
        throw io_error("manifest: shadow/group lists do not match n");
    const BitGroupLayout layout = BitGroupLayout::of(m.params);
    for (int i = 1; i <= m.params.n; ++i) {
        if (m.groups[static_cast<std::size_t>(i - 1)] != layout.group_of(i))
            throw io_error("manifest: group membership inconsistent with layout");
    }
    for (std::size_t i = 0; i < m.shadow_files.size(); ++i)
        for (std::size_t j = i + 1; j < m.shadow_files.size(); ++j)
            if (m.shadow_files[i] == m.shadow_files[j])
                throw io_error("manifest: duplicate shadow filename");
    return m;
}

}  // namespace rgvcs
