#pragma once

#include <cstddef>
#include <vector>

#include "hseal/rational.hpp"

namespace hseal {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of Rationals. Values are immutable in spirit:
/// the cipher paths construct a matrix once and only read from it.
class RatMatrix {
public:
    /// Zero-filled rows x cols matrix. Both dimensions must be positive.
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    bool operator==(const RatMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
               entries_ == rhs.entries_;
    }
    bool operator!=(const RatMatrix& rhs) const { return !(*this == rhs); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

/// Exact matrix-vector product. Throws std::invalid_argument naming both
/// dimensions when m.cols() != v.size().
RatVector mat_vec(const RatMatrix& m, const RatVector& v);

/// Exact matrix product. Throws std::invalid_argument on dimension mismatch.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

/// Exact inverse by Gauss-Jordan elimination on rationals. The pivot is the
/// first row with a nonzero entry in the column: exact arithmetic needs no
/// magnitude pivoting, and fixed pivot choice keeps the routine
/// deterministic. Throws SingularMatrixError when no inverse exists and
/// std::invalid_argument when m is not square.
RatMatrix gauss_inverse(const RatMatrix& m);

}  // namespace hseal
