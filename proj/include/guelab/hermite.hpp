#pragma once

// Weighted orthonormal Hermite functions hhat_n(x) = h_n(x) e^{-x^2/2},
// where {h_n} are orthonormal with respect to the weight e^{-x^2}:
//   ∫ h_i h_j e^{-x^2} dx = δ_ij.
//
// The three-term recurrence
//   x h_n = sqrt((n+1)/2) h_{n+1} + sqrt(n/2) h_{n-1}
// also holds for the weighted functions (the weight factors out), so the
// recurrence is run directly on hhat with seed hhat_0 = π^{-1/4} e^{-x^2/2}.
// In the oscillatory region |x| < sqrt(2n) the weighted values stay O(n^{-1/4});
// outside they decay, so the recurrence never overflows.  The seed e^{-x^2/2}
// itself underflows for |x| > ~38, which would silently zero everything, so the
// weight is carried as a separate base-e exponent and the running pair is
// rescaled whenever it leaves [1e-250, 1e250].

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "guelab/errors.hpp"

namespace guelab {

inline constexpr double kQuarterRootPi = 0.7511255444649424828587;  // π^{-1/4}

// hhat_{n-1}, hhat_n, hhat_{n+1} evaluated at one point.
struct HermiteTriple {
    double prev = 0.0;  // hhat_{n-1}
    double cur = 0.0;   // hhat_n
    double next = 0.0;  // hhat_{n+1}
};

namespace detail {

constexpr double kRescaleHi = 1e250;
constexpr double kRescaleLo = 1e-250;
constexpr double kRescaleLogHi = 575.6462732485114210;  // log(1e250)

// Combine a mantissa-like value f with base-e exponent L into f·e^L.
inline double scaled_value(double f, double log_scale) {
    if (f == 0.0) return 0.0;
    if (log_scale == 0.0) return f;
    if (log_scale > -700.0 && log_scale < 700.0) return f * std::exp(log_scale);
    const double lg = log_scale + std::log(std::fabs(f));
    if (lg < -745.0) return 0.0;
    return std::copysign(std::exp(lg), f);
}

}  // namespace detail

// hhat_{n-1}(x), hhat_n(x), hhat_{n+1}(x) in one recurrence pass.
inline HermiteTriple hermite_weighted_triple(std::int64_t n, double x) {
    if (n < 1) throw DomainError("hermite_weighted_triple: n must be >= 1");
    double log_scale = -0.5 * x * x;
    double f_prev = kQuarterRootPi;              // hhat_0 / e^{log_scale}
    double f_cur = std::sqrt(2.0) * x * f_prev;  // hhat_1 / e^{log_scale}
    double t_prev = 0.0, t_cur = 0.0, t_next = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) {
        const double f_next =
            std::sqrt(2.0 / double(k + 1)) * x * f_cur - std::sqrt(double(k) / double(k + 1)) * f_prev;
        if (k == n) {
            t_prev = f_prev;
            t_cur = f_cur;
            t_next = f_next;
            break;
        }
        f_prev = f_cur;
        f_cur = f_next;
        const double mag = std::fabs(f_cur) + std::fabs(f_prev);
        if (mag > detail::kRescaleHi) {
            f_prev *= detail::kRescaleLo;
            f_cur *= detail::kRescaleLo;
            log_scale += detail::kRescaleLogHi;
        } else if (mag < detail::kRescaleLo && mag > 0.0) {
            f_prev *= detail::kRescaleHi;
            f_cur *= detail::kRescaleHi;
            log_scale -= detail::kRescaleLogHi;
        }
    }
    return {detail::scaled_value(t_prev, log_scale), detail::scaled_value(t_cur, log_scale),
            detail::scaled_value(t_next, log_scale)};
}

// hhat_n(x) = h_n(x) e^{-x^2/2}.  Total on n >= 0, finite x; no overflow for
// n <= 1e5, |x| <= 1e3 (values beyond the turning point underflow to 0, which
// is the correctly rounded result).
inline double hermite_weighted(std::int64_t n, double x) {
    if (n < 0) throw DomainError("hermite_weighted: n must be >= 0");
    if (n == 0) return kQuarterRootPi * std::exp(-0.5 * x * x);
    if (n == 1) return std::sqrt(2.0) * x * kQuarterRootPi * std::exp(-0.5 * x * x);
    return hermite_weighted_triple(n - 1, x).next;
}

// hhat_0..hhat_{nmax} at one point, written into out (size nmax+1).
// Intended for moderate nmax where the plain seed does not underflow.
inline void hermite_weighted_sequence(std::int64_t nmax, double x, std::span<double> out) {
    if (nmax < 0 || out.size() < std::size_t(nmax + 1))
        throw DomainError("hermite_weighted_sequence: bad size");
    out[0] = kQuarterRootPi * std::exp(-0.5 * x * x);
    if (nmax == 0) return;
    out[1] = std::sqrt(2.0) * x * out[0];
    for (std::int64_t k = 1; k < nmax; ++k)
        out[k + 1] = std::sqrt(2.0 / double(k + 1)) * x * out[k] -
                     std::sqrt(double(k) / double(k + 1)) * out[k - 1];
}

}  // namespace guelab
