#include "rgvcs/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgvcs {

namespace {

constexpr std::uint64_t kLimbBase = 1ULL << 32;

std::size_t bit_length(const std::vector<std::uint32_t>& m) {
    if (m.empty()) return 0;
    std::uint32_t top = m.back();
    std::size_t bits = (m.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool get_bit(const std::vector<std::uint32_t>& m, std::size_t i) {
    return (m[i / 32] >> (i % 32)) & 1U;
}

// Shift left by one and set the low bit. Used by the long-division loop.
void shl1_or(std::vector<std::uint32_t>& m, bool low) {
    std::uint32_t carry = low ? 1U : 0U;
    for (auto& limb : m) {
        const std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry != 0) m.push_back(carry);
}

}  // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    negative_ = v < 0;
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag));
        mag >>= 32;
    }
}

BigInt BigInt::from_u64(std::uint64_t v) {
    BigInt r;
    while (v != 0) {
        r.limbs_.push_back(static_cast<std::uint32_t>(v));
        v >>= 32;
    }
    return r;
}

BigInt BigInt::make(bool negative, Mag limbs) {
    trim(limbs);
    BigInt r;
    r.limbs_ = std::move(limbs);
    r.negative_ = negative && !r.limbs_.empty();
    return r;
}

void BigInt::trim(Mag& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int BigInt::compare_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
    Mag out(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    trim(out);
    return out;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
    Mag out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(diff);
    }
    trim(out);
    return out;
}

BigInt::Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] +
                                static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t pos = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = out[pos] + carry;
            out[pos] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++pos;
        }
    }
    trim(out);
    return out;
}

// Bitwise long division: simple and adequate at the operand sizes used here.
std::pair<BigInt::Mag, BigInt::Mag> BigInt::divmod_mag(const Mag& a, const Mag& b) {
    if (b.empty()) throw std::invalid_argument("BigInt: division by zero");
    if (compare_mag(a, b) < 0) return {Mag{}, a};
    const std::size_t nbits = bit_length(a);
    Mag quotient((nbits + 31) / 32, 0);
    Mag remainder;
    for (std::size_t i = nbits; i-- > 0;) {
        shl1_or(remainder, get_bit(a, i));
        if (compare_mag(remainder, b) >= 0) {
            remainder = sub_mag(remainder, b);
            quotient[i / 32] |= 1U << (i % 32);
        }
    }
    trim(quotient);
    trim(remainder);
    return {std::move(quotient), std::move(remainder)};
}

BigInt BigInt::operator-() const { return make(!negative_, limbs_); }

BigInt BigInt::abs() const { return make(false, limbs_); }

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_)
        return BigInt::make(a.negative_, BigInt::add_mag(a.limbs_, b.limbs_));
    const int cmp = BigInt::compare_mag(a.limbs_, b.limbs_);
    if (cmp == 0) return BigInt{};
    if (cmp > 0) return BigInt::make(a.negative_, BigInt::sub_mag(a.limbs_, b.limbs_));
    return BigInt::make(b.negative_, BigInt::sub_mag(b.limbs_, a.limbs_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    return BigInt::make(a.negative_ != b.negative_, BigInt::mul_mag(a.limbs_, b.limbs_));
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod_mag(a.limbs_, b.limbs_);
    return {make(a.negative_ != b.negative_, std::move(q)), make(a.negative_, std::move(r))};
}

BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).first; }

BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).second; }

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs();
    BigInt y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
    if (negative_ != other.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    const int cmp = compare_mag(limbs_, other.limbs_);
    const int sign_adjusted = negative_ ? -cmp : cmp;
    if (sign_adjusted < 0) return std::strong_ordering::less;
    if (sign_adjusted > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double BigInt::to_double() const {
    double value = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        value = value * 4294967296.0 + static_cast<double>(limbs_[i]);
    return negative_ ? -value : value;
}

bool BigInt::fits_u64() const { return !negative_ && limbs_.size() <= 2; }

std::uint64_t BigInt::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigInt::to_u64: value out of range");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    Mag work = limbs_;
    std::string digits;
    while (!work.empty()) {
        // Short division by 1e9 peels off nine decimal digits per pass.
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        trim(work);
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace rgvcs
