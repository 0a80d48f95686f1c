#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rgvcs {

// Compact arbitrary-precision signed integer (sign + base-2^32 magnitude).
// Covers what exact rational arithmetic needs: ring operations, comparison,
// truncated division, gcd, and decimal rendering.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor)
    static BigInt from_u64(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Truncated toward zero; remainder carries the dividend's sign.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b);  // non-negative

    bool operator==(const BigInt& other) const = default;
    std::strong_ordering operator<=>(const BigInt& other) const;

    double to_double() const;
    bool fits_u64() const;
    std::uint64_t to_u64() const;  // throws std::overflow_error when out of range
    std::string to_string() const;

private:
    using Mag = std::vector<std::uint32_t>;

    static int compare_mag(const Mag& a, const Mag& b);
    static Mag add_mag(const Mag& a, const Mag& b);
    static Mag sub_mag(const Mag& a, const Mag& b);  // requires a >= b
    static Mag mul_mag(const Mag& a, const Mag& b);
    static std::pair<Mag, Mag> divmod_mag(const Mag& a, const Mag& b);
    static void trim(Mag& m);

    static BigInt make(bool negative, Mag limbs);

    bool negative_ = false;  // canonical: zero is non-negative with empty limbs
    Mag limbs_;              // little-endian, no leading zero limbs
};

}  // namespace rgvcs
