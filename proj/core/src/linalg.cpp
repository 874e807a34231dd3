#include "hseal/linalg.hpp"

#include <stdexcept>
#include <string>

#include "hseal/errors.hpp"

namespace hseal {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("RatMatrix: dimensions must be positive");
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    if (m.cols() != v.size()) {
        throw std::invalid_argument(
            "mat_vec: matrix has " + std::to_string(m.cols()) +
            " columns but vector has " + std::to_string(v.size()) + " entries");
    }
    RatVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational sum;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            sum += m(i, j) * v[j];
        }
        out[i] = sum;
    }
    return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument(
            "mat_mul: left has " + std::to_string(a.cols()) +
            " columns but right has " + std::to_string(b.rows()) + " rows");
    }
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

RatMatrix gauss_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("gauss_inverse: matrix is not square");
    }
    const std::size_t n = m.rows();

    // Gauss-Jordan on the augmented matrix [m | I].
    RatMatrix work = m;
    RatMatrix inv = RatMatrix::identity(n);

    for (std::size_t col = 0; col < n; ++col) {
        // First nonzero entry in this column at or below the diagonal.
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrixError("gauss_inverse: matrix is singular");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }

        const Rational scale = Rational(1) / work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= scale;
            inv(col, j) *= scale;
        }

        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work(row, col).is_zero()) {
                continue;
            }
            const Rational factor = work(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(row, j) -= factor * work(col, j);
                inv(row, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace hseal
