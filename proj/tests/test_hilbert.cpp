#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "hseal/hilbert.hpp"
#include "hseal/linalg.hpp"

using hseal::binomial;
using hseal::hilbert_inverse;
using hseal::hilbert_matrix;
using hseal::RatMatrix;
using hseal::Rational;

TEST_CASE("binomial: small and boundary cases") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 7) == 1);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial matches a Pascal-triangle oracle") {
    std::vector<std::vector<mpz_class>> pascal(31);
    for (unsigned long a = 0; a <= 30; ++a) {
        pascal[a].resize(a + 1);
        pascal[a][0] = pascal[a][a] = 1;
        for (unsigned long b = 1; b < a; ++b) {
            pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
        }
    }
    CHECK(pascal[30][15] == 155117520);
    for (unsigned long a = 0; a <= 30; ++a) {
        for (unsigned long b = 0; b <= a; ++b) {
            CHECK(binomial(a, static_cast<long>(b)) == pascal[a][b]);
        }
    }
}

TEST_CASE("hilbert_matrix: definition-forced orders") {
    RatMatrix h1 = hilbert_matrix(1);
    CHECK(h1(0, 0) == Rational(1));

    RatMatrix h2 = hilbert_matrix(2);
    CHECK(h2(0, 0) == Rational(1));
    CHECK(h2(0, 1) == Rational(1, 2));
    CHECK(h2(1, 0) == Rational(1, 2));
    CHECK(h2(1, 1) == Rational(1, 3));

    RatMatrix h3 = hilbert_matrix(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(h3(i, j) == Rational(1, static_cast<long>(i + j + 1)));
        }
    }

    CHECK_THROWS_AS(hilbert_matrix(0), std::invalid_argument);
}

TEST_CASE("hilbert_inverse: values fixed by the elimination oracle") {
    CHECK(hilbert_inverse(1)(0, 0) == Rational(1));

    RatMatrix inv2 = hilbert_inverse(2);
    CHECK(inv2(0, 0) == Rational(4));
    CHECK(inv2(0, 1) == Rational(-6));
    CHECK(inv2(1, 0) == Rational(-6));
    CHECK(inv2(1, 1) == Rational(12));

    RatMatrix inv3 = hilbert_inverse(3);
    const long expected[3][3] = {
        {9, -36, 30}, {-36, 192, -180}, {30, -180, 180}};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(inv3(i, j) == Rational(expected[i][j]));
        }
    }
}

TEST_CASE("closed form agrees with the elimination oracle") {
    for (std::size_t n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(hilbert_inverse(n) == gauss_inverse(hilbert_matrix(n)));
    }
}

TEST_CASE("every inverse entry is an integer") {
    for (std::size_t n = 1; n <= 20; ++n) {
        RatMatrix inv = hilbert_inverse(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CAPTURE(n);
                CHECK(inv(i, j).is_integer());
            }
        }
    }
}

TEST_CASE("H times its inverse is exactly the identity") {
    for (std::size_t n = 1; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(mat_mul(hilbert_matrix(n), hilbert_inverse(n)) ==
              RatMatrix::identity(n));
    }
}

TEST_CASE("the inverse is symmetric") {
    for (std::size_t n : {2, 5, 9, 14}) {
        RatMatrix inv = hilbert_inverse(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                CHECK(inv(i, j) == inv(j, i));
            }
        }
    }
}
