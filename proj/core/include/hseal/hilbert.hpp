#pragma once

#include <cstddef>

#include <gmpxx.h>

#include "hseal/linalg.hpp"

namespace hseal {

/// Exact binomial coefficient C(a, b); zero when b < 0 or b > a.
mpz_class binomial(unsigned long a, long b);

/// The order-n matrix with entries H[i][j] = 1/(i+j+1), zero-based.
/// Symmetric, positive definite, and notoriously ill-conditioned in floating
/// point; see stability_report for the measurement.
RatMatrix hilbert_matrix(std::size_t order);

/// Exact inverse of hilbert_matrix(order) in closed form,
///
///   inv[i][j] = (-1)^(i+j) (i+j+1) C(n+i, n-j-1) C(n+j, n-i-1) C(i+j, i)^2
///
/// (zero-based). Every entry is an integer. O(n^2) binomial evaluations,
/// which is why this is the production route and Gauss-Jordan elimination
/// only the test oracle.
RatMatrix hilbert_inverse(std::size_t order);

}  // namespace hseal
