#ifndef RIESZKIT_QUADRATURE_HPP
#define RIESZKIT_QUADRATURE_HPP

#include <cmath>
#include <numbers>

#include "rieszkit/errors.hpp"

namespace rieszkit {

/// Double-exponential (exp-sinh) quadrature over (0, inf). Handles integrable
/// endpoint singularities x^c with c > -1 and exponential tails. Refines the
/// step until two successive levels agree to tol.
template <class F>
double integrate_zero_inf(F&& f, double tol = 1e-10) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double t_max = 4.3; // abscissas beyond this underflow the weights
    auto node_sum = [&](double h, bool only_odd) {
        // sums f(x(t)) x(t) (pi/2) cosh(t) over the grid t = k h
        double acc = 0.0;
        const int k_max = static_cast<int>(t_max / h);
        for (int k = only_odd ? 1 : 0; k <= k_max; k += only_odd ? 2 : 1) {
            for (int s : {1, -1}) {
                if (k == 0 && s == -1) continue;
                const double t = s * k * h;
                const double x = std::exp(half_pi * std::sinh(t));
                if (x == 0.0 || !std::isfinite(x)) continue;
                const double w = half_pi * std::cosh(t) * x;
                const double v = f(x);
                if (std::isfinite(v)) acc += v * w;
            }
        }
        return acc;
    };

    double h = 0.5;
    double sum = node_sum(h, false);
    double integral = h * sum;
    for (int level = 0; level < 8; ++level) {
        h *= 0.5;
        sum += node_sum(h, true);
        const double refined = h * sum;
        if (std::abs(refined - integral) <= tol * std::max(1.0, std::abs(refined)) && level >= 2)
            return refined;
        integral = refined;
    }
    throw QuadratureFailure("exp-sinh quadrature did not reach the requested tolerance");
}

/// Integral over the whole real line of an even function.
template <class F>
double integrate_real_line_even(F&& f, double tol = 1e-10) {
    return 2.0 * integrate_zero_inf(f, tol);
}

} // namespace rieszkit

#endif
