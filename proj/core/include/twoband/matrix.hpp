#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "twoband/errors.hpp"

namespace twoband {

using Complex = std::complex<double>;

/// Dense row-major matrix. Dimensions may be zero (empty products and
/// degenerate decomposition blocks use that).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
        if (rows < 0 || cols < 0) fail(ErrorCode::DimensionMismatch, "negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

    bool operator==(const Matrix& other) const = default;

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Submatrix with the given (0-based) row and column index selections.
    Matrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        Matrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_idx[i], col_idx[j]);
        return s;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "matrix product inner dimensions disagree");
    Matrix<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const T ail = a(i, l);
            if (ail == T{}) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

template <typename T>
Matrix<T> matrix_power(const Matrix<T>& a, int e) {
    if (!a.square()) fail(ErrorCode::NotSquare, "matrix power needs a square matrix");
    Matrix<T> r = Matrix<T>::identity(a.rows());
    for (int i = 0; i < e; ++i) r = multiply(r, a);
    return r;
}

template <typename T>
T trace(const Matrix<T>& a) {
    T t{};
    for (int i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

/// Determinant by LU with partial pivoting. Intended for the small dense
/// matrices this project manipulates; not a high-performance kernel.
template <typename T>
T determinant(Matrix<T> a) {
    if (!a.square()) fail(ErrorCode::NotSquare, "determinant needs a square matrix");
    const int n = a.rows();
    T det{1};
    for (int c = 0; c < n; ++c) {
        int piv = c;
        double best = std::abs(a(c, c));
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > best) { best = std::abs(a(r, c)); piv = r; }
        if (best == 0.0) return T{};
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(a(piv, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int r = c + 1; r < n; ++r) {
            const T f = a(r, c) / a(c, c);
            if (f == T{}) continue;
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix c(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) c(i, j) = Complex(m(i, j), 0.0);
    return c;
}

/// Extracts the real part, failing if any entry has an imaginary component
/// above `tol` (in magnitude).
inline RealMatrix real_part_checked(const ComplexMatrix& m, double tol = 0.0) {
    RealMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (std::abs(m(i, j).imag()) > tol)
                fail(ErrorCode::RealityViolation, "matrix entry has a nonreal component");
            r(i, j) = m(i, j).real();
        }
    return r;
}

inline double max_abs(const ComplexMatrix& m) {
    double v = 0.0;
    for (const auto& z : m.data()) v = std::max(v, std::abs(z));
    return v;
}

} // namespace twoband
