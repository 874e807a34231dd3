#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hseal {

/// Arbitrary-precision rational, always held in canonical form:
///   - denominator > 0 (sign lives in the numerator)
///   - gcd(|num|, den) == 1
///   - zero is exactly 0/1
///
/// Canonical form is restored after every construction and arithmetic
/// result, so equality is plain structural comparison and the textual form
/// is unique per value.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}
    Rational(const mpz_class& value) : num_(value), den_(1) {}

    /// Throws std::domain_error when den == 0.
    Rational(mpz_class num, mpz_class den);

    const mpz_class& num() const noexcept { return num_; }
    const mpz_class& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_negative() const noexcept { return num_ < 0; }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    /// Throws std::domain_error on division by zero.
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
    bool operator<(const Rational& rhs) const;
    bool operator>(const Rational& rhs) const { return rhs < *this; }
    bool operator<=(const Rational& rhs) const { return !(rhs < *this); }
    bool operator>=(const Rational& rhs) const { return !(*this < rhs); }

    /// Canonical text form: base-10 "num/den", "/den" omitted when den == 1.
    std::string str() const;

    /// Strict inverse of str(): accepts exactly the canonical form and
    /// nothing else (no whitespace, no "+", no leading zeros, no zero or
    /// unit denominator, no reducible fraction). Throws
    /// std::invalid_argument on any violation.
    static Rational parse(std::string_view text);

private:
    void canonicalize();

    mpz_class num_;
    mpz_class den_;
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace hseal
