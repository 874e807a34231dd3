#include "hseal/analysis.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hseal/hilbert.hpp"
#include "hseal/linalg.hpp"

namespace hseal {

namespace {

// Gauss-Jordan with partial (max-magnitude) pivoting on doubles, the
// standard dense route. Returns false when a pivot collapses to exactly 0.
bool invert_double(std::vector<double>& a, std::size_t n,
                   std::vector<double>& inv) {
    inv.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        inv[i * n + i] = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::fabs(a[col * n + col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            double mag = std::fabs(a[row * n + col]);
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        if (best == 0.0) {
            return false;
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[pivot * n + j], a[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
        }
        double scale = 1.0 / a[col * n + col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col * n + j] *= scale;
            inv[col * n + j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col) {
                continue;
            }
            double factor = a[row * n + col];
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                a[row * n + j] -= factor * a[col * n + j];
                inv[row * n + j] -= factor * inv[col * n + j];
            }
        }
    }
    return true;
}

double float_residual(std::size_t n, bool& singular) {
    std::vector<double> h(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h[i * n + j] = 1.0 / static_cast<double>(i + j + 1);
        }
    }
    std::vector<double> work = h;
    std::vector<double> inv;
    if (!invert_double(work, n, inv)) {
        singular = true;
        return std::numeric_limits<double>::infinity();
    }
    singular = false;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sum += h[i * n + k] * inv[k * n + j];
            }
            double err = std::fabs(sum - (i == j ? 1.0 : 0.0));
            if (err > worst) {
                worst = err;
            }
        }
    }
    return worst;
}

Rational exact_residual(std::size_t n) {
    RatMatrix product = mat_mul(hilbert_matrix(n), hilbert_inverse(n));
    Rational worst;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational err =
                abs(product(i, j) - Rational(i == j ? 1 : 0));
            if (worst < err) {
                worst = err;
            }
        }
    }
    return worst;
}

std::string shortest_double(double v) {
    if (std::isinf(v)) {
        return "inf";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

}  // namespace

std::vector<StabilityRow> stability_report(std::size_t max_order) {
    if (max_order < 1 || max_order > 20) {
        throw std::invalid_argument(
            "stability_report: max order must be in [1, 20]");
    }
    std::vector<StabilityRow> rows;
    rows.reserve(max_order);
    for (std::size_t order = 1; order <= max_order; ++order) {
        StabilityRow row;
        row.order = order;
        row.float_residual = float_residual(order, row.float_singular);
        row.exact_residual = exact_residual(order);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string stability_csv(const std::vector<StabilityRow>& rows) {
    std::string out = "order,float_residual,exact_residual\n";
    for (const StabilityRow& row : rows) {
        out += std::to_string(row.order);
        out += ',';
        out += shortest_double(row.float_residual);
        out += ',';
        out += row.exact_residual.str();
        out += '\n';
    }
    return out;
}

}  // namespace hseal
