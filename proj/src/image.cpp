#include "rgvcs/image.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rgvcs/errors.hpp"
#include "rgvcs/random_source.hpp"

namespace rgvcs {

namespace {

constexpr std::int64_t kMaxPixels = std::int64_t{1} << 30;

class PbmScanner {
public:
    explicit PbmScanner(std::string_view bytes) : bytes_(bytes) {}

    // Skips whitespace and '#' comments, then parses a decimal integer.
    int next_int(const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_])))
            throw io_error(std::string("pbm: missing ") + what);
        std::int64_t value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > kMaxPixels) throw io_error(std::string("pbm: ") + what + " overflows");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    Bit next_plain_bit() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size()) throw io_error("pbm: truncated plain raster");
        const char c = bytes_[pos_++];
        if (c != '0' && c != '1') throw io_error("pbm: invalid raster character");
        return static_cast<Bit>(c - '0');
    }

    // P4: a single whitespace byte separates the header from the raster.
    void expect_single_space() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_])))
            throw io_error("pbm: malformed header");
        ++pos_;
    }

    std::string_view rest() const { return bytes_.substr(pos_); }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

BinaryImage::BinaryImage(int height, int width, Bit fill) : height_(height), width_(width) {
    if (height < 1 || width < 1)
        throw std::invalid_argument("BinaryImage: dimensions must be positive");
    if (static_cast<std::int64_t>(height) * width > kMaxPixels)
        throw std::invalid_argument("BinaryImage: image too large");
    bits_.assign(static_cast<std::size_t>(height) * width, fill);
}

std::string encode_pbm(const BinaryImage& image, PbmFormat format) {
    if (image.pixel_count() == 0) throw std::invalid_argument("encode_pbm: empty image");
    if (format == PbmFormat::automatic)
        format = image.pixel_count() <= kPlainPbmLimit ? PbmFormat::plain : PbmFormat::packed;

    std::ostringstream out;
    if (format == PbmFormat::plain) {
        out << "P1\n" << image.width() << ' ' << image.height() << '\n';
        for (int r = 0; r < image.height(); ++r) {
            for (int c = 0; c < image.width(); ++c) {
                if (c > 0) out << ' ';
                out << static_cast<int>(image.at(r, c));
            }
            out << '\n';
        }
    } else {
        out << "P4\n" << image.width() << ' ' << image.height() << '\n';
        const int row_bytes = (image.width() + 7) / 8;
        std::string row(static_cast<std::size_t>(row_bytes), '\0');
        for (int r = 0; r < image.height(); ++r) {
            for (auto& b : row) b = '\0';
            for (int c = 0; c < image.width(); ++c) {
                if (image.at(r, c) != 0)
                    row[static_cast<std::size_t>(c / 8)] |= static_cast<char>(0x80 >> (c % 8));
            }
            out.write(row.data(), row_bytes);
        }
    }
    return std::move(out).str();
}

BinaryImage decode_pbm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4'))
        throw io_error("pbm: not a P1/P4 file");
    const bool packed = bytes[1] == '4';
    PbmScanner scan(bytes.substr(2));

    const int width = scan.next_int("width");
    const int height = scan.next_int("height");
    if (width < 1 || height < 1) throw io_error("pbm: dimensions must be positive");
    if (static_cast<std::int64_t>(width) * height > kMaxPixels)
        throw io_error("pbm: dimension overflow");

    BinaryImage image(height, width);
    if (packed) {
        scan.expect_single_space();
        const std::string_view raster = scan.rest();
        const std::size_t row_bytes = static_cast<std::size_t>((width + 7) / 8);
        if (raster.size() < row_bytes * static_cast<std::size_t>(height))
            throw io_error("pbm: truncated packed raster");
        for (int r = 0; r < height; ++r) {
            const char* row = raster.data() + row_bytes * static_cast<std::size_t>(r);
            for (int c = 0; c < width; ++c) {
                const unsigned char byte = static_cast<unsigned char>(row[c / 8]);
                image.set(r, c, static_cast<Bit>((byte >> (7 - c % 8)) & 1U));
            }
        }
    } else {
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c) image.set(r, c, scan.next_plain_bit());
    }
    return image;
}

BinaryImage read_pbm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw io_error("cannot read " + path);
    return decode_pbm(std::move(buf).str());
}

void write_pbm_file(const std::string& path, const BinaryImage& image, PbmFormat format) {
    const std::string bytes = encode_pbm(image, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw io_error("cannot write " + path);
}

BinaryImage make_random_grid(int height, int width, std::uint64_t seed) {
    BinaryImage image(height, width);
    for (int r = 0; r < height; ++r) {
        RandomSource rng(seed, (static_cast<std::uint64_t>(r) << 32) | 0xFFFFFFFFULL);
        for (int c = 0; c < width; ++c) image.set(r, c, rng.bit());
    }
    return image;
}

BinaryImage make_half_plane(int height, int width) {
    BinaryImage image(height, width);
    for (int r = 0; r < height; ++r)
        for (int c = width / 2; c < width; ++c) image.set(r, c, 1);
    return image;
}

}  // namespace rgvcs
