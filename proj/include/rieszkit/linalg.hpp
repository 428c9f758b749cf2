#ifndef RIESZKIT_LINALG_HPP
#define RIESZKIT_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "rieszkit/errors.hpp"
#include "rieszkit/matrix.hpp"

namespace rieszkit {

/// Complex 2n x 2m image of a quaternion matrix: each entry q = z + w j maps
/// in place to [[z, w], [-conj w, conj z]], so the map is an algebra
/// homomorphism and triangular structure survives blockwise.
inline Matrix<std::complex<double>> quaternion_complex_embedding(const Matrix<Quaternion>& m) {
    Matrix<std::complex<double>> out(2 * m.rows(), 2 * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Quaternion& q = m(i, j);
            const std::complex<double> z(q.w, q.x), w(q.y, q.z);
            out(2 * i, 2 * j) = z;
            out(2 * i, 2 * j + 1) = w;
            out(2 * i + 1, 2 * j) = -std::conj(w);
            out(2 * i + 1, 2 * j + 1) = std::conj(z);
        }
    return out;
}

/// Inverse of the embedding, averaging the two redundant copies of each entry.
inline Matrix<Quaternion> quaternion_from_embedding(const Matrix<std::complex<double>>& e) {
    Matrix<Quaternion> out(e.rows() / 2, e.cols() / 2);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) {
            const std::complex<double> z =
                0.5 * (e(2 * i, 2 * j) + std::conj(e(2 * i + 1, 2 * j + 1)));
            const std::complex<double> w =
                0.5 * (e(2 * i, 2 * j + 1) - std::conj(e(2 * i + 1, 2 * j)));
            out(i, j) = Quaternion(z.real(), z.imag(), w.real(), w.imag());
        }
    return out;
}

namespace detail {

inline Eigen::MatrixXcd to_eigen_complex(const Matrix<double>& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}
inline Eigen::MatrixXcd to_eigen_complex(const Matrix<std::complex<double>>& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}
inline Eigen::MatrixXcd to_eigen_complex(const Matrix<Quaternion>& m) {
    return to_eigen_complex(quaternion_complex_embedding(m));
}

template <class S>
Matrix<S> from_eigen_complex(const Eigen::MatrixXcd& e);

template <>
inline Matrix<double> from_eigen_complex<double>(const Eigen::MatrixXcd& e) {
    Matrix<double> out(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out(i, j) = e(i, j).real();
    return out;
}
template <>
inline Matrix<std::complex<double>> from_eigen_complex<std::complex<double>>(
    const Eigen::MatrixXcd& e) {
    Matrix<std::complex<double>> out(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out(i, j) = e(i, j);
    return out;
}
template <>
inline Matrix<Quaternion> from_eigen_complex<Quaternion>(const Eigen::MatrixXcd& e) {
    Matrix<std::complex<double>> tmp(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < tmp.rows(); ++i)
        for (int j = 0; j < tmp.cols(); ++j) tmp(i, j) = e(i, j);
    return quaternion_from_embedding(tmp);
}

} // namespace detail

/// Lower Cholesky factor with real positive diagonal: P = L L*.
template <class S>
Matrix<S> cholesky_lower(const Matrix<S>& p) {
    using T = algebra_traits<S>;
    if (p.rows() != p.cols()) throw NotHermitian("cholesky requires a square matrix");
    const int n = p.rows();
    Matrix<S> l(n, n);
    for (int j = 0; j < n; ++j) {
        double d = T::real(p(j, j));
        for (int k = 0; k < j; ++k) d -= T::abs_sq(l(j, k));
        if (!(d > 0.0) || !std::isfinite(d))
            throw NotPositiveDefinite("cholesky pivot " + std::to_string(j) + " is not positive");
        const double ljj = std::sqrt(d);
        l(j, j) = T::from_real(ljj);
        for (int i = j + 1; i < n; ++i) {
            S acc = p(i, j);
            for (int k = 0; k < j; ++k) acc = acc - l(i, k) * T::conj(l(j, k));
            l(i, j) = acc / ljj;
        }
    }
    return l;
}

/// Solves L x = b for lower-triangular L (columns of b handled independently).
template <class S>
Matrix<S> solve_lower_triangular(const Matrix<S>& l, const Matrix<S>& b) {
    using T = algebra_traits<S>;
    const int n = l.rows();
    Matrix<S> x = b;
    for (int c = 0; c < b.cols(); ++c)
        for (int i = 0; i < n; ++i) {
            S acc = x(i, c);
            for (int k = 0; k < i; ++k) acc = acc - l(i, k) * x(k, c);
            x(i, c) = T::inv(l(i, i)) * acc;
        }
    return x;
}

/// Solves L* x = b for lower-triangular L.
template <class S>
Matrix<S> solve_upper_from_lower(const Matrix<S>& l, const Matrix<S>& b) {
    using T = algebra_traits<S>;
    const int n = l.rows();
    Matrix<S> x = b;
    for (int c = 0; c < b.cols(); ++c)
        for (int i = n - 1; i >= 0; --i) {
            S acc = x(i, c);
            for (int k = i + 1; k < n; ++k) acc = acc - T::conj(l(k, i)) * x(k, c);
            x(i, c) = T::inv(T::conj(l(i, i))) * acc;
        }
    return x;
}

/// P^{-1} B through the Cholesky factorization of Hermitian positive definite P.
template <class S>
Matrix<S> hpd_solve(const Matrix<S>& p, const Matrix<S>& b) {
    const Matrix<S> l = cholesky_lower(p);
    return solve_upper_from_lower(l, solve_lower_triangular(l, b));
}

template <class S>
Matrix<S> hpd_inverse(const Matrix<S>& p) {
    return hpd_solve(p, Matrix<S>::identity(p.rows()));
}

/// Real eigenvalues of a self-adjoint matrix, descending. The quaternion case
/// goes through the complex embedding; its doubled spectrum is collapsed back
/// to m values.
template <class S>
std::vector<double> hermitian_eigenvalues(const Matrix<S>& m, double rel_tol = 1e-12) {
    if (!is_hermitian(m, rel_tol)) throw NotHermitian("matrix is not self-adjoint");
    const Eigen::MatrixXcd e = detail::to_eigen_complex(symmetrized(m));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    if constexpr (beta_of<S> == 4) {
        std::vector<double> collapsed;
        collapsed.reserve(vals.size() / 2);
        for (std::size_t i = 0; i < vals.size(); i += 2)
            collapsed.push_back(0.5 * (vals[i] + vals[i + 1]));
        return collapsed;
    }
    return vals;
}

/// Positive definite square root (unique); computed in the complex embedding
/// and pulled back, which commutes with the quaternion structure.
template <class S>
Matrix<S> pd_sqrt(const Matrix<S>& p, double rel_tol = 1e-12) {
    if (!is_hermitian(p, rel_tol)) throw NotHermitian("pd_sqrt requires a self-adjoint matrix");
    const Eigen::MatrixXcd e = detail::to_eigen_complex(symmetrized(p));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
    const auto& vals = solver.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        if (!(vals(i) > 0.0)) throw NotPositiveDefinite("pd_sqrt: eigenvalue is not positive");
    const Eigen::MatrixXcd root =
        solver.eigenvectors() * vals.cwiseSqrt().asDiagonal() * solver.eigenvectors().adjoint();
    return detail::from_eigen_complex<S>(root);
}

/// Determinants of the leading principal blocks (|P_1|, ..., |P_m|), each a
/// positive real (the Moore determinant for quaternions). Computed from one
/// Cholesky pass: |P_p| = prod_{i<=p} L_ii^2.
template <class S>
std::vector<double> leading_minor_dets(const Matrix<S>& p) {
    const Matrix<S> l = cholesky_lower(p);
    std::vector<double> out(p.rows());
    double acc = 0.0;
    for (int i = 0; i < p.rows(); ++i) {
        acc += 2.0 * std::log(algebra_traits<S>::real(l(i, i)));
        out[i] = std::exp(acc);
    }
    return out;
}

/// Log of the leading principal minor determinants; the numerically safe form.
template <class S>
std::vector<double> leading_minor_log_dets(const Matrix<S>& p) {
    const Matrix<S> l = cholesky_lower(p);
    std::vector<double> out(p.rows());
    double acc = 0.0;
    for (int i = 0; i < p.rows(); ++i) {
        acc += 2.0 * std::log(algebra_traits<S>::real(l(i, i)));
        out[i] = acc;
    }
    return out;
}

template <class S>
double log_det_hpd(const Matrix<S>& p) {
    return leading_minor_log_dets(p).back();
}

/// Self-adjoint positive definite matrix. Symmetrizes on ingestion (relative
/// tolerance 1e-12) and verifies positive definiteness via Cholesky.
template <class S>
class HermitianPD {
  public:
    explicit HermitianPD(const Matrix<S>& m, double rel_tol = 1e-12) : mat_(symmetrized(m)) {
        if (!is_hermitian(m, rel_tol)) throw NotHermitian("matrix is not self-adjoint");
        (void)cholesky_lower(mat_); // throws NotPositiveDefinite on failure
    }

    static HermitianPD identity(int n) { return HermitianPD(Matrix<S>::identity(n)); }

    int dim() const { return mat_.rows(); }
    const Matrix<S>& mat() const { return mat_; }

  private:
    Matrix<S> mat_;
};

} // namespace rieszkit

#endif
