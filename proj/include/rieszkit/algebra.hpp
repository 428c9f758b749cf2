#ifndef RIESZKIT_ALGEBRA_HPP
#define RIESZKIT_ALGEBRA_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "rieszkit/errors.hpp"

namespace rieszkit {

/// Hamilton quaternion with double components (w + x i + y j + z k).
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend constexpr Quaternion operator*(const Quaternion& a, double s) {
        return {a.w * s, a.x * s, a.y * s, a.z * s};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& a) { return a * s; }
    friend constexpr Quaternion operator/(const Quaternion& a, double s) {
        return {a.w / s, a.x / s, a.y / s, a.z / s};
    }

    Quaternion& operator+=(const Quaternion& b) { return *this = *this + b; }
    Quaternion& operator-=(const Quaternion& b) { return *this = *this - b; }
    Quaternion& operator*=(const Quaternion& b) { return *this = *this * b; }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

inline constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }
inline constexpr Quaternion inverse(const Quaternion& q) { return conj(q) / norm_sq(q); }

/// The scalar algebra selector: beta is the real dimension of the algebra.
/// Only the associative cases 1 (real), 2 (complex), 4 (quaternion) are
/// representable; 8 (octonion) is rejected at construction.
class DivisionAlgebra {
  public:
    explicit DivisionAlgebra(int beta) : beta_(beta) {
        if (beta != 1 && beta != 2 && beta != 4)
            throw WrongAlgebra("division algebra dimension must be 1, 2 or 4, got " +
                               std::to_string(beta));
    }
    int beta() const { return beta_; }

    friend bool operator==(DivisionAlgebra a, DivisionAlgebra b) { return a.beta_ == b.beta_; }

  private:
    int beta_;
};

// Scalar traits unifying double / std::complex<double> / Quaternion.
template <class S>
struct algebra_traits;

template <>
struct algebra_traits<double> {
    static constexpr int beta = 1;
    static double conj(double v) { return v; }
    static double real(double v) { return v; }
    static double abs_sq(double v) { return v * v; }
    static double one() { return 1.0; }
    static double zero() { return 0.0; }
    static double from_real(double v) { return v; }
    static double from_components(const std::array<double, 4>& c) { return c[0]; }
    static std::array<double, 4> components(double v) { return {v, 0, 0, 0}; }
    static double inv(double v) { return 1.0 / v; }
};

template <>
struct algebra_traits<std::complex<double>> {
    using S = std::complex<double>;
    static constexpr int beta = 2;
    static S conj(const S& v) { return std::conj(v); }
    static double real(const S& v) { return v.real(); }
    static double abs_sq(const S& v) { return std::norm(v); }
    static S one() { return {1.0, 0.0}; }
    static S zero() { return {0.0, 0.0}; }
    static S from_real(double v) { return {v, 0.0}; }
    static S from_components(const std::array<double, 4>& c) { return {c[0], c[1]}; }
    static std::array<double, 4> components(const S& v) { return {v.real(), v.imag(), 0, 0}; }
    static S inv(const S& v) { return 1.0 / v; }
};

template <>
struct algebra_traits<Quaternion> {
    static constexpr int beta = 4;
    static Quaternion conj(const Quaternion& v) { return rieszkit::conj(v); }
    static double real(const Quaternion& v) { return v.w; }
    static double abs_sq(const Quaternion& v) { return norm_sq(v); }
    static Quaternion one() { return {1.0}; }
    static Quaternion zero() { return {0.0}; }
    static Quaternion from_real(double v) { return {v}; }
    static Quaternion from_components(const std::array<double, 4>& c) {
        return {c[0], c[1], c[2], c[3]};
    }
    static std::array<double, 4> components(const Quaternion& v) { return {v.w, v.x, v.y, v.z}; }
    static Quaternion inv(const Quaternion& v) { return inverse(v); }
};

template <class S>
inline constexpr int beta_of = algebra_traits<S>::beta;

/// Calls f with a value of type S* (null tag) for the algebra matching beta.
template <class F>
decltype(auto) dispatch_algebra(int beta, F&& f) {
    switch (beta) {
        case 1: return f(static_cast<double*>(nullptr));
        case 2: return f(static_cast<std::complex<double>*>(nullptr));
        case 4: return f(static_cast<Quaternion*>(nullptr));
        default:
            throw WrongAlgebra("division algebra dimension must be 1, 2 or 4, got " +
                               std::to_string(beta));
    }
}

} // namespace rieszkit

#endif
