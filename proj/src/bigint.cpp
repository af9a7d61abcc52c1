#include "decor/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace decor {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t value) {
    negative_ = value < 0;
    // Two-step negation via uint64 avoids UB on INT64_MIN.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1u
                                  : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
    trim();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigInt BigInt::add_magnitude(const BigInt& a, const BigInt& b) {
    BigInt out;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    out.limbs_.reserve(n + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry;
        if (i < a.limbs_.size()) sum += a.limbs_[i];
        if (i < b.limbs_.size()) sum += b.limbs_[i];
        out.limbs_.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
    }
    if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

BigInt BigInt::sub_magnitude(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_.reserve(a.limbs_.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a.limbs_[i]) - borrow;
        if (i < b.limbs_.size()) diff -= b.limbs_[i];
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.limbs_.push_back(static_cast<std::uint32_t>(diff));
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (negative_ == rhs.negative_) {
        BigInt out = add_magnitude(*this, rhs);
        out.negative_ = negative_;
        out.trim();
        return out;
    }
    int cmp = compare_magnitude(*this, rhs);
    if (cmp == 0) return BigInt();
    BigInt out = cmp > 0 ? sub_magnitude(*this, rhs) : sub_magnitude(rhs, *this);
    out.negative_ = cmp > 0 ? negative_ : rhs.negative_;
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt();
    BigInt out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                                carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.negative_ = negative_ != rhs.negative_;
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    q = BigInt();
    r = BigInt();
    if (compare_magnitude(a, b) < 0) {
        r = a;
        return;
    }
    // Binary long division on magnitudes, MSB first.
    const std::size_t nbits = a.bit_length();
    q.limbs_.assign((nbits + 31) / 32, 0);
    for (std::size_t i = nbits; i-- > 0;) {
        // r = (r << 1) | a.bit(i)
        std::uint32_t carry = a.bit(i) ? 1u : 0u;
        for (std::size_t k = 0; k < r.limbs_.size(); ++k) {
            std::uint32_t next = r.limbs_[k] >> 31;
            r.limbs_[k] = (r.limbs_[k] << 1) | carry;
            carry = next;
        }
        if (carry) r.limbs_.push_back(carry);
        if (compare_magnitude(r, b) >= 0) {
            r = sub_magnitude(r, b);
            q.limbs_[i / 32] |= 1u << (i % 32);
        }
    }
    q.trim();
    r.trim();
    q.negative_ = !q.is_zero() && (a.negative_ != b.negative_);
    r.negative_ = !r.is_zero() && a.negative_;
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs();
    BigInt y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x;
}

BigInt BigInt::pow(const BigInt& base, unsigned exponent) {
    BigInt result(1);
    BigInt acc = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= acc;
        exponent >>= 1;
        if (exponent) acc *= acc;
    }
    return result;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt result(1);
    for (unsigned i = 2; i <= n; ++i) result *= BigInt(i);
    return result;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt();
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (unsigned i = 1; i <= k; ++i) {
        result *= BigInt(n - k + i);
        result = result / BigInt(i);  // always exact at this point
    }
    return result;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (negative_ != rhs.negative_) return negative_;
    int cmp = compare_magnitude(*this, rhs);
    return negative_ ? cmp > 0 : cmp < 0;
}

double BigInt::to_double() const {
    double mag = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        mag = mag * 4294967296.0 + static_cast<double>(limbs_[i]);
    return negative_ ? -mag : mag;
}

std::int64_t BigInt::to_int64() const {
    if (bit_length() > 63) throw std::overflow_error("BigInt: does not fit in int64");
    std::int64_t mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        mag = (mag << 32) | static_cast<std::int64_t>(limbs_[i]);
    return negative_ ? -mag : mag;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt value = abs();
    const BigInt ten(10);
    while (!value.is_zero()) {
        BigInt q, r;
        divmod(value, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
        value = q;
    }
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt value;
    const BigInt ten(10);
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw std::invalid_argument("BigInt: bad digit in \"" + std::string(text) + "\"");
        value = value * ten + BigInt(c - '0');
    }
    if (neg && !value.is_zero()) value.negative_ = true;
    return value;
}

}  // namespace decor
