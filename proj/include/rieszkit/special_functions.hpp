#ifndef RIESZKIT_SPECIAL_FUNCTIONS_HPP
#define RIESZKIT_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "rieszkit/errors.hpp"
#include "rieszkit/linalg.hpp"
#include "rieszkit/partition.hpp"

namespace rieszkit {

/// Value carried as (log-magnitude, sign) so products of gammas and signed
/// Pochhammer factors never overflow.
struct LogSigned {
    double log_abs = 0.0; // log |value|; -inf means exact zero
    int sign = 1;         // -1, 0, +1

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    friend LogSigned operator*(const LogSigned& a, const LogSigned& b) {
        if (a.sign == 0 || b.sign == 0)
            return {-std::numeric_limits<double>::infinity(), 0};
        return {a.log_abs + b.log_abs, a.sign * b.sign};
    }

    static LogSigned from_value(double v) {
        if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
        return {std::log(std::abs(v)), v > 0 ? 1 : -1};
    }
};

/// Standard Pochhammer symbol (a)_k = a (a+1) ... (a+k-1), sign tracked.
inline LogSigned pochhammer(double a, int k) {
    LogSigned out{0.0, 1};
    for (int i = 0; i < k; ++i) out = out * LogSigned::from_value(a + i);
    return out;
}

/// Generalized Pochhammer symbol of weight kappa:
/// [a]_kappa^beta = prod_i (a - (i-1) beta/2)_{k_i}.
inline LogSigned gen_pochhammer(double a, const Partition& kappa, int beta) {
    LogSigned out{0.0, 1};
    for (int i = 0; i < kappa.length(); ++i)
        out = out * pochhammer(a - 0.5 * beta * i, kappa.part(i));
    return out;
}

/// log Gamma_m^beta[a] = m(m-1)beta/4 * log pi + sum_i log Gamma(a - (i-1)beta/2).
inline double log_mv_gamma(double a, int m, int beta) {
    if (!(a > 0.5 * beta * (m - 1)))
        throw DomainViolation("multivariate gamma requires a > (m-1)beta/2");
    double out = 0.25 * m * (m - 1) * beta * std::log(std::numbers::pi);
    for (int i = 0; i < m; ++i) out += std::lgamma(a - 0.5 * beta * i);
    return out;
}

enum class GammaSign { plus, minus };

/// Domain of a weighted multivariate gamma evaluation.
/// plus:  Gamma_m^beta[a, kappa],  requires a > (m-1)beta/2 - k_m
/// minus: Gamma_m^beta[a, -kappa], requires a > (m-1)beta/2 + k_1
struct GammaDomain {
    double a = 0.0;
    int m = 1;
    int beta = 1;
    Partition kappa;
    GammaSign sign = GammaSign::plus;
};

inline double log_mv_gamma_weighted(const GammaDomain& dom) {
    double out = 0.25 * dom.m * (dom.m - 1) * dom.beta * std::log(std::numbers::pi);
    for (int i = 0; i < dom.m; ++i) {
        const double arg = dom.sign == GammaSign::plus
                               ? dom.a + dom.kappa.part(i) - 0.5 * dom.beta * i
                               : dom.a - dom.kappa.part(i) - 0.5 * dom.beta * (dom.m - 1 - i);
        if (!(arg > 0.0))
            throw DomainViolation("weighted multivariate gamma argument " + std::to_string(arg) +
                                  " is not positive");
        out += std::lgamma(arg);
    }
    return out;
}

inline double log_mv_gamma_weighted(double a, int m, int beta, const Partition& kappa,
                                    GammaSign sign = GammaSign::plus) {
    return log_mv_gamma_weighted(GammaDomain{a, m, beta, kappa, sign});
}

/// log Vol(V^beta_{m,n}) = log[ 2^m pi^{mn beta/2} / Gamma_m^beta(n beta/2) ].
inline double stiefel_log_volume(int n, int m, int beta) {
    if (n < m || m < 1) throw DomainViolation("stiefel volume requires n >= m >= 1");
    return m * std::numbers::ln2 + 0.5 * m * n * beta * std::log(std::numbers::pi) -
           log_mv_gamma(0.5 * n * beta, m, beta);
}

/// log q_kappa from precomputed log minor determinants.
inline double q_kappa_log_from_minors(const std::vector<double>& log_minors,
                                      const Partition& kappa) {
    const int m = static_cast<int>(log_minors.size());
    if (kappa.length() > m)
        throw std::invalid_argument("partition has more nonzero parts than the matrix dimension");
    double out = 0.0;
    for (int i = 0; i < m; ++i) {
        const int diff = kappa.part(i) - (i + 1 < m ? kappa.part(i + 1) : 0);
        out += diff * log_minors[i];
    }
    return out;
}

/// Highest weight vector (generalized power):
/// q_kappa(A) = |A_m|^{k_m} prod_{i<m} |A_i|^{k_i - k_{i+1}}, log form.
template <class S>
double q_kappa_log(const Matrix<S>& a, const Partition& kappa) {
    const std::vector<double> log_minors = leading_minor_log_dets(symmetrized(a));
    for (double lm : log_minors)
        if (!(lm > std::log(1e-300)))
            throw NotPositiveDefinite("q_kappa: minor determinant underflows");
    return q_kappa_log_from_minors(log_minors, kappa);
}

template <class S>
double q_kappa(const Matrix<S>& a, const Partition& kappa) {
    return std::exp(q_kappa_log(a, kappa));
}

template <class S>
double q_kappa(const HermitianPD<S>& a, const Partition& kappa) {
    return q_kappa(a.mat(), kappa);
}

} // namespace rieszkit

#endif
