#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rgvcs/sharing.hpp"

namespace rgvcs {

// Binary raster, row-major, one byte per pixel. 0 = transparent (white),
// 1 = opaque (black), matching the PBM convention that 1 is black ink.
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(int height, int width, Bit fill = 0);

    int height() const { return height_; }
    int width() const { return width_; }
    std::int64_t pixel_count() const {
        return static_cast<std::int64_t>(height_) * width_;
    }

    Bit at(int r, int c) const {
        assert(r >= 0 && r < height_ && c >= 0 && c < width_);
        return bits_[static_cast<std::size_t>(r) * width_ + c];
    }
    void set(int r, int c, Bit v) {
        assert(r >= 0 && r < height_ && c >= 0 && c < width_);
        bits_[static_cast<std::size_t>(r) * width_ + c] = v;
    }

    std::span<const Bit> pixels() const { return bits_; }
    std::span<Bit> pixels() { return bits_; }

    bool operator==(const BinaryImage&) const = default;

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<Bit> bits_;
};

enum class PbmFormat {
    automatic,  // plain for small images, packed otherwise
    plain,      // P1
    packed      // P4
};

// Pixel-count threshold under which automatic encoding stays human-readable.
inline constexpr std::int64_t kPlainPbmLimit = 4096;

std::string encode_pbm(const BinaryImage& image, PbmFormat format = PbmFormat::automatic);
BinaryImage decode_pbm(std::string_view bytes);  // throws io_error on malformed input

BinaryImage read_pbm_file(const std::string& path);
void write_pbm_file(const std::string& path, const BinaryImage& image,
                    PbmFormat format = PbmFormat::automatic);

// Fixture generators shared by the CLI and the test suites.
BinaryImage make_random_grid(int height, int width, std::uint64_t seed);
// Left half transparent, right half opaque.
BinaryImage make_half_plane(int height, int width);

}  // namespace rgvcs
