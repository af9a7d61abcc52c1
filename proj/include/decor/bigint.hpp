#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace decor {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
///
/// Covers exactly what the exact linear algebra needs: ring operations,
/// truncated division, gcd, powers, decimal I/O. Magnitudes stay small
/// (node matrices up to 7x7), so schoolbook algorithms are deliberate.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);

    static BigInt from_string(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    /// Truncated toward zero, like built-in integer division.
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    /// Quotient and remainder in one pass; remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(const BigInt& a, const BigInt& b);  // non-negative
    static BigInt pow(const BigInt& base, unsigned exponent);
    static BigInt factorial(unsigned n);
    static BigInt binomial(unsigned n, unsigned k);

    bool operator==(const BigInt& rhs) const;
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;
    bool operator>(const BigInt& rhs) const { return rhs < *this; }
    bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
    bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

    double to_double() const;
    /// Exact value if it fits in int64, throws std::overflow_error otherwise.
    std::int64_t to_int64() const;
    std::string to_string() const;

private:
    // Little-endian limbs, no trailing zeros; zero is the empty vector.
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;

    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static BigInt add_magnitude(const BigInt& a, const BigInt& b);
    static BigInt sub_magnitude(const BigInt& a, const BigInt& b);  // |a| >= |b|
};

}  // namespace decor
