#pragma once

#include <compare>
#include <string>

#include "rgvcs/bigint.hpp"

namespace rgvcs {

// Exact rational number, always stored in lowest terms with a positive
// denominator. All contrast theory runs on these; decimals appear only at
// the reporting boundary.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt numerator, BigInt denominator);
    static Rational of(long long numerator, long long denominator);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    bool operator==(const Rational& other) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const;  // "p/q", or "p" for integers

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

}  // namespace rgvcs
