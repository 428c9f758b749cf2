#ifndef RIESZKIT_STATS_HPP
#define RIESZKIT_STATS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "rieszkit/errors.hpp"

namespace rieszkit {

inline double normal_cdf(double x, double mean = 0.0, double sd = 1.0) {
    return 0.5 * std::erfc(-(x - mean) / (sd * std::numbers::sqrt2));
}

/// Regularized lower incomplete gamma P(a, x): series for x < a+1, continued
/// fraction otherwise.
inline double gamma_cdf_regularized(double a, double x) {
    if (x <= 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a, sum = term, ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    // Lentz continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
}

/// Gamma(shape, rate) cumulative distribution function.
inline double gamma_cdf(double x, double shape, double rate) {
    return gamma_cdf_regularized(shape, rate * x);
}

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

namespace detail {

/// Asymptotic Kolmogorov survival function.
inline double ks_p_value(double d, double n_eff) {
    const double sn = std::sqrt(n_eff);
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

} // namespace detail

/// One-sample Kolmogorov-Smirnov test against a reference CDF.
inline KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.size() < 100) throw TooFewSamples("ks test needs at least 100 samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - i / n));
        d = std::max(d, std::abs((i + 1) / n - f));
    }
    return {d, detail::ks_p_value(d, n)};
}

/// Two-sample Kolmogorov-Smirnov test.
inline KsResult ks_test_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.size() < 100 || b.size() < 100)
        throw TooFewSamples("two-sample ks test needs at least 100 samples per side");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                                 static_cast<double>(j) / b.size()));
    }
    const double n_eff =
        static_cast<double>(a.size()) * b.size() / static_cast<double>(a.size() + b.size());
    return {d, detail::ks_p_value(d, n_eff)};
}

/// Running mean / standard error accumulator.
struct MeanAccumulator {
    double sum = 0.0, sum_sq = 0.0;
    long long n = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    double mean() const { return sum / n; }
    double variance() const {
        const double m = mean();
        return std::max(0.0, sum_sq / n - m * m) * n / std::max<long long>(1, n - 1);
    }
    double std_error() const { return std::sqrt(variance() / n); }
};

} // namespace rieszkit

#endif
