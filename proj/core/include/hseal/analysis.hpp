#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hseal/rational.hpp"

namespace hseal {

/// One order's residuals: how far H * H^-1 lands from the identity when the
/// inverse is computed in double precision versus exactly.
struct StabilityRow {
    std::size_t order = 0;
    /// max-norm of |H * Hinv - I| with Hinv from double-precision Gaussian
    /// elimination with partial pivoting; +inf when the factorization
    /// collapses entirely.
    double float_residual = 0.0;
    bool float_singular = false;
    /// max-norm of the exact-path residual. Always 0; computed, not assumed.
    Rational exact_residual;
};

/// Measure orders 1..max_order. This is the one place in the toolkit where
/// floating point is allowed to exist, and it exists to show what the exact
/// path avoids: the double-precision residual grows catastrophically with
/// the order while the exact residual stays identically zero.
/// max_order must be in [1, 20]; beyond that the double path is pure noise.
std::vector<StabilityRow> stability_report(std::size_t max_order);

/// CSV rendering: "order,float_residual,exact_residual", one row per order,
/// floats in shortest round-trip decimal. Deterministic.
std::string stability_csv(const std::vector<StabilityRow>& rows);

}  // namespace hseal
