#pragma once

#include <string>
#include <string_view>

#include "decor/bigint.hpp"

namespace decor {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(BigInt numerator, BigInt denominator = BigInt(1));
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses "p", "-p" or "p/q" as printed by to_string.
    static Rational from_string(std::string_view text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const;
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
    bool operator<(const Rational& rhs) const;

    static Rational pow(const Rational& base, int exponent);
    Rational reciprocal() const;

    double to_double() const;
    std::string to_string() const;  // "p" or "p/q"

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace decor
