#ifndef RIESZKIT_MATRIX_HPP
#define RIESZKIT_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rieszkit/algebra.hpp"

namespace rieszkit {

/// Dense row-major matrix over one of the three scalar algebras.
/// Multiplication preserves factor order, so the quaternion case is safe.
template <class S>
class Matrix {
  public:
    using scalar_type = S;
    using traits = algebra_traits<S>;

    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, traits::zero()) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = traits::one();
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = traits::conj((*this)(i, j));
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S aik = a(i, k);
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Matrix operator*(const Matrix& a, double s) {
        Matrix out = a;
        for (auto& v : out.data_) v = v * s;
        return out;
    }
    friend Matrix operator*(double s, const Matrix& a) { return a * s; }

    double frobenius_norm() const {
        double acc = 0.0;
        for (const auto& v : data_) acc += traits::abs_sq(v);
        return std::sqrt(acc);
    }

    /// Real part of the trace; equals the full trace for self-adjoint input.
    double real_trace() const {
        double acc = 0.0;
        const int n = rows_ < cols_ ? rows_ : cols_;
        for (int i = 0; i < n; ++i) acc += traits::real((*this)(i, i));
        return acc;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

template <class S>
Matrix<S> conj_transpose(const Matrix<S>& m) {
    return m.adjoint();
}

/// Euclidean pairing Re tr(X Y*) of two same-shape matrices; this is the
/// inner product of the underlying real coordinate space.
template <class S>
double real_pairing(const Matrix<S>& x, const Matrix<S>& y) {
    double acc = 0.0;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            auto a = algebra_traits<S>::components(x(i, j));
            auto b = algebra_traits<S>::components(y(i, j));
            for (int c = 0; c < algebra_traits<S>::beta; ++c) acc += a[c] * b[c];
        }
    return acc;
}

template <class S>
Matrix<S> symmetrized(const Matrix<S>& m) {
    Matrix<S> out = m.adjoint();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = (out(i, j) + m(i, j)) * 0.5;
    return out;
}

template <class S>
bool is_hermitian(const Matrix<S>& m, double rel_tol = 1e-12) {
    if (m.rows() != m.cols()) return false;
    const Matrix<S> d = m - m.adjoint();
    return d.frobenius_norm() <= rel_tol * std::max(1.0, m.frobenius_norm());
}

} // namespace rieszkit

#endif
