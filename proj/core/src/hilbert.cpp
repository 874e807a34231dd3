#include "hseal/hilbert.hpp"

#include <stdexcept>

namespace hseal {

mpz_class binomial(unsigned long a, long b) {
    if (b < 0 || static_cast<unsigned long>(b) > a) {
        return 0;
    }
    unsigned long k = static_cast<unsigned long>(b);
    if (a - k < k) {
        k = a - k;
    }
    // Multiplicative formula; every partial product is C(a-k+i, i), so the
    // division is always exact.
    mpz_class r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= a - k + i;
        r /= i;
    }
    return r;
}

RatMatrix hilbert_matrix(std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("hilbert_matrix: order must be positive");
    }
    RatMatrix h(order, order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            h(i, j) = Rational(1, static_cast<long>(i + j + 1));
        }
    }
    return h;
}

RatMatrix hilbert_inverse(std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("hilbert_inverse: order must be positive");
    }
    const unsigned long n = order;
    RatMatrix inv(order, order);
    for (unsigned long i = 0; i < n; ++i) {
        // Symmetric: fill j >= i and mirror.
        for (unsigned long j = i; j < n; ++j) {
            mpz_class e = mpz_class(i + j + 1) *
                          binomial(n + i, static_cast<long>(n - j - 1)) *
                          binomial(n + j, static_cast<long>(n - i - 1));
            mpz_class c = binomial(i + j, static_cast<long>(i));
            e *= c * c;
            if ((i + j) % 2 == 1) {
                e = -e;
            }
            inv(i, j) = Rational(e);
            inv(j, i) = inv(i, j);
        }
    }
    return inv;
}

}  // namespace hseal
