#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "hseal/rational.hpp"
#include "hseal/rng.hpp"

using hseal::Rational;
using hseal::SeededRng;

namespace {

bool is_canonical(const Rational& r) {
    if (r.den() <= 0) {
        return false;
    }
    if (r.num() == 0) {
        return r.den() == 1;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return g == 1;
}

Rational random_rational(SeededRng& rng) {
    long num = static_cast<long>(rng.uniform(0, 100)) - 50;
    long den = static_cast<long>(rng.uniform(1, 50));
    return Rational(num, den);
}

}  // namespace

TEST_CASE("construction reduces to canonical form") {
    Rational half(2, 4);
    CHECK(half.num() == 1);
    CHECK(half.den() == 2);

    Rational neg(3, -6);
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 2);

    Rational zero(0, 7);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);
    CHECK(zero == Rational());
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(5) / Rational(0), std::domain_error);
}

TEST_CASE("arithmetic stays canonical and exact") {
    SeededRng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);

        Rational sum = a + b;
        Rational diff = a - b;
        Rational prod = a * b;
        CHECK(is_canonical(sum));
        CHECK(is_canonical(diff));
        CHECK(is_canonical(prod));

        // Exact arithmetic: structural equality, no tolerance.
        CHECK((sum - b) == a);
        CHECK((diff + b) == a);
        if (!b.is_zero()) {
            CHECK(is_canonical(a / b));
            CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("comparison is exact value order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("str emits the canonical text form") {
    CHECK(Rational(-6).str() == "-6");
    CHECK(Rational(29, 12).str() == "29/12");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational().str() == "0");
}

TEST_CASE("parse round-trips str") {
    SeededRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Rational r = random_rational(rng);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("parse rejects everything str would not emit") {
    const std::vector<std::string> bad = {
        "",     "1/0",  "2/4",   "5/1",  "-0",   "0/3", "1/-2",
        "01",   "1/02", " 1",    "1 ",   "+3",   "1/",  "/2",
        "1//2", "a",    "1.5",   "--1",  "-0/5",
    };
    for (const std::string& s : bad) {
        CAPTURE(s);
        CHECK_THROWS_AS(Rational::parse(s), std::invalid_argument);
    }
}
