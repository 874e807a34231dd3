#include "hseal/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace hseal {

Rational::Rational(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    canonicalize();
}

void Rational::canonicalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

bool Rational::operator<(const Rational& rhs) const {
    // a/b < c/d  iff  a*d < c*b, both denominators positive.
    return num_ * rhs.den_ < rhs.num_ * den_;
}

std::string Rational::str() const {
    std::string out = num_.get_str();
    if (den_ != 1) {
        out += '/';
        out += den_.get_str();
    }
    return out;
}

namespace {

// "0" or [1-9][0-9]*, optional leading '-' ("-0" excluded).
bool valid_canonical_int(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
        if (s == "0") {
            return false;
        }
    }
    if (s.empty()) {
        return false;
    }
    if (s.size() > 1 && s.front() == '0') {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }

    if (!valid_canonical_int(num_part)) {
        throw std::invalid_argument("Rational::parse: malformed numerator in '" +
                                    std::string(text) + "'");
    }
    mpz_class num(std::string(num_part), 10);

    if (den_part.empty() && text.find('/') != std::string_view::npos) {
        throw std::invalid_argument("Rational::parse: empty denominator in '" +
                                    std::string(text) + "'");
    }
    if (den_part.empty()) {
        Rational r;
        r.num_ = std::move(num);
        r.den_ = 1;
        return r;
    }

    if (!valid_canonical_int(den_part) || den_part.front() == '-') {
        throw std::invalid_argument(
            "Rational::parse: malformed denominator in '" + std::string(text) +
            "'");
    }
    mpz_class den(std::string(den_part), 10);
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" +
                                    std::string(text) + "'");
    }
    if (den == 1) {
        throw std::invalid_argument(
            "Rational::parse: denominator 1 must be omitted in '" +
            std::string(text) + "'");
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (num == 0 || g != 1) {
        throw std::invalid_argument("Rational::parse: '" + std::string(text) +
                                    "' is not in lowest terms");
    }
    Rational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

Rational abs(const Rational& value) {
    return value.is_negative() ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

}  // namespace hseal
