#include "doctest.h"

#include <stdexcept>
#include <string>

#include "hseal/errors.hpp"
#include "hseal/hilbert.hpp"
#include "hseal/linalg.hpp"
#include "hseal/rng.hpp"

using hseal::RatMatrix;
using hseal::Rational;
using hseal::RatVector;
using hseal::SeededRng;

namespace {

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

}  // namespace

TEST_CASE("mat_vec: identity and forced arithmetic") {
    RatVector v = {Rational(1), Rational(1, 2), Rational(5)};
    CHECK(mat_vec(RatMatrix::identity(3), v) == v);

    RatMatrix h2 = from_rows({{Rational(1), Rational(1, 2)},
                              {Rational(1, 2), Rational(1, 3)}});
    RatVector out = mat_vec(h2, {Rational(2), Rational(6)});
    CHECK(out == RatVector{Rational(5), Rational(3)});
}

TEST_CASE("mat_vec: exact H3 product") {
    // Recomputed by hand: row sums 1+1+5/3, 1/2+2/3+5/4, 1/3+1/2+1.
    RatVector out = hseal::mat_vec(hseal::hilbert_matrix(3),
                                   {Rational(1), Rational(2), Rational(5)});
    CHECK(out ==
          RatVector{Rational(11, 3), Rational(29, 12), Rational(11, 6)});
}

TEST_CASE("mat_vec: dimension mismatch names both sizes") {
    try {
        mat_vec(RatMatrix::identity(3), {Rational(1)});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        CHECK(what.find('3') != std::string::npos);
        CHECK(what.find('1') != std::string::npos);
    }
}

TEST_CASE("mat_mul: identities and forced products") {
    CHECK(mat_mul(RatMatrix::identity(2), RatMatrix::identity(2)) ==
          RatMatrix::identity(2));

    RatMatrix a = from_rows({{Rational(1), Rational(1)},
                             {Rational(0), Rational(1)}});
    RatMatrix b = from_rows({{Rational(1), Rational(0)},
                             {Rational(1), Rational(1)}});
    CHECK(mat_mul(a, b) == from_rows({{Rational(2), Rational(1)},
                                      {Rational(1), Rational(1)}}));

    CHECK(mat_mul(hseal::hilbert_matrix(2),
                  gauss_inverse(hseal::hilbert_matrix(2))) ==
          RatMatrix::identity(2));

    CHECK_THROWS_AS(mat_mul(RatMatrix(2, 3), RatMatrix(2, 3)),
                    std::invalid_argument);
}

TEST_CASE("gauss_inverse: diagonal and textbook cases") {
    CHECK(gauss_inverse(RatMatrix::identity(4)) == RatMatrix::identity(4));

    RatMatrix diag = from_rows({{Rational(2), Rational(0)},
                                {Rational(0), Rational(4)}});
    CHECK(gauss_inverse(diag) == from_rows({{Rational(1, 2), Rational(0)},
                                            {Rational(0), Rational(1, 4)}}));

    RatMatrix h2_inv = gauss_inverse(hseal::hilbert_matrix(2));
    CHECK(h2_inv == from_rows({{Rational(4), Rational(-6)},
                               {Rational(-6), Rational(12)}}));
}

TEST_CASE("gauss_inverse: singular and non-square inputs") {
    RatMatrix singular = from_rows({{Rational(1), Rational(2)},
                                    {Rational(2), Rational(4)}});
    CHECK_THROWS_AS(gauss_inverse(singular), hseal::SingularMatrixError);
    CHECK_THROWS_AS(gauss_inverse(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("gauss_inverse: random integer matrices invert exactly") {
    SeededRng rng(23);
    int inverted = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = rng.uniform(1, 6);
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) =
                    Rational(static_cast<long>(rng.uniform(0, 18)) - 9);
            }
        }
        try {
            RatMatrix inv = gauss_inverse(m);
            CHECK(mat_mul(m, inv) == RatMatrix::identity(n));
            CHECK(mat_mul(inv, m) == RatMatrix::identity(n));
            ++inverted;
        } catch (const hseal::SingularMatrixError&) {
            // fine: random matrices are occasionally singular
        }
    }
    CHECK(inverted > 30);
}

TEST_CASE("mat_vec distributes over vector addition") {
    SeededRng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = rng.uniform(1, 5);
        RatMatrix m(n, n);
        RatVector u(n), v(n), sum(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = Rational(static_cast<long>(rng.uniform(0, 40)) - 20,
                                   static_cast<long>(rng.uniform(1, 9)));
            }
            u[i] = Rational(static_cast<long>(rng.uniform(0, 40)) - 20,
                            static_cast<long>(rng.uniform(1, 9)));
            v[i] = Rational(static_cast<long>(rng.uniform(0, 40)) - 20,
                            static_cast<long>(rng.uniform(1, 9)));
            sum[i] = u[i] + v[i];
        }
        RatVector lhs = mat_vec(m, sum);
        RatVector mu = mat_vec(m, u);
        RatVector mv = mat_vec(m, v);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(lhs[i] == mu[i] + mv[i]);
        }
    }
}
