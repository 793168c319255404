#pragma once

// Airy function Ai and its derivative on the real line, |x| <= 20 to 1e-12
// absolute error.
//
// Three branches:
//   x in [-9, 5.5]  — Maclaurin series Ai = c1·f − c2·g.  The raw terms reach
//                     ~e^{|x|^{3/2}·(2/3)}-scale before cancellation, so partial
//                     sums and term recurrences run in double-double arithmetic
//                     (the plain-double series loses ~e^{r} · ulp absolutely,
//                     which is ~2e-11 at x = -8).
//   x > 5.5         — Poincaré expansion with u_k/v_k coefficients.
//   x < -9          — oscillatory expansion, cos/sin(ζ − π/4) carrier; the
//                     truncation floor at r = 9 is below 1e-14.
// Seam agreement at both switch points is unit-tested.

#include <cmath>
#include <limits>
#include <numbers>

#include "guelab/errors.hpp"

namespace guelab {

struct AiryPair {
    double ai = 0.0;
    double ai_prime = 0.0;
};

namespace detail {

// Minimal double-double arithmetic (error-free transformations).
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD dd_two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD dd_add(DD a, DD b) {
    DD s = dd_two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    const DD r = dd_two_sum(s.hi, s.lo);
    return r;
}

inline DD dd_two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_mul(DD a, DD b) {
    DD p = dd_two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(DD a, double b) {
    DD p = dd_two_prod(a.hi, b);
    p.lo += a.lo * b;
    return dd_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double b) {
    const double q1 = a.hi / b;
    const DD p = dd_two_prod(q1, b);
    const double q2 = ((a.hi - p.hi) - p.lo + a.lo) / b;
    return dd_two_sum(q1, q2);
}

// Ai(0) = 3^{-2/3}/Γ(2/3) and Ai'(0) = -3^{-1/3}/Γ(1/3), to double-double.
inline constexpr DD kAi0{0.3550280538878172, 2.05233632436212e-17};
inline constexpr DD kAip0{-0.2588194037928068, 2.522243111610832e-17};

// Maclaurin series for Ai, Ai' via the two entire solutions
//   f  = Σ a_k x^{3k},    a_0 = 1,  a_k = a_{k-1} x^3 / ((3k)(3k-1))
//   g  = Σ b_k x^{3k+1},  b_0 = x,  b_k = b_{k-1} x^3 / ((3k+1)(3k))
//   f' = Σ c_k x^{3k-1},  c_k = a_{k-1} x^2 / (3k-1)
//   g' = Σ e_k x^{3k},    e_0 = 1,  e_k = b_{k-1} x^2 / (3k)
// with Ai = Ai(0) f + Ai'(0) g.
inline AiryPair airy_series(double x) {
    const DD xd{x, 0.0};
    const DD x2 = dd_mul(xd, xd);
    const DD x3 = dd_mul(x2, xd);
    DD ta{1.0, 0.0};
    DD tb{x, 0.0};
    DD f = ta, g = tb;
    DD fp{0.0, 0.0};
    DD gp{1.0, 0.0};
    for (int k = 1; k <= 160; ++k) {
        fp = dd_add(fp, dd_div_d(dd_mul(ta, x2), double(3 * k - 1)));
        gp = dd_add(gp, dd_div_d(dd_mul(tb, x2), double(3 * k)));
        ta = dd_div_d(dd_mul(ta, x3), double(3 * k) * double(3 * k - 1));
        tb = dd_div_d(dd_mul(tb, x3), double(3 * k + 1) * double(3 * k));
        f = dd_add(f, ta);
        g = dd_add(g, tb);
        if (std::fabs(ta.hi) < 1e-40 * (1.0 + std::fabs(f.hi)) &&
            std::fabs(tb.hi) < 1e-40 * (1.0 + std::fabs(g.hi)))
            break;
    }
    const DD ai = dd_add(dd_mul(kAi0, f), dd_mul(kAip0, g));
    const DD aip = dd_add(dd_mul(kAi0, fp), dd_mul(kAip0, gp));
    return {ai.hi + ai.lo, aip.hi + aip.lo};
}

// u_k, v_k coefficient pair for the Poincaré expansions.
//   u_0 = 1,  u_{k+1} = u_k (6k+5)(6k+3)(6k+1) / (216 (k+1)(2k+1))
//   v_k = -u_k (6k+1)/(6k-1)  (v_0 = 1)
inline AiryPair airy_asymptotic_positive(double x) {
    const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    double uk = 1.0, su = 1.0, sv = 1.0, sign = -1.0, zp = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 0; k < 40; ++k) {
        uk *= double(6 * k + 5) * double(6 * k + 3) * double(6 * k + 1) /
              (216.0 * double(k + 1) * double(2 * k + 1));
        const double vk = -uk * double(6 * (k + 1) + 1) / double(6 * (k + 1) - 1);
        zp *= zeta;
        const double tu = sign * uk / zp;
        const double tv = sign * vk / zp;
        if (std::fabs(tu) >= prev) break;  // asymptotic series: stop at smallest term
        prev = std::fabs(tu);
        su += tu;
        sv += tv;
        sign = -sign;
        if (std::fabs(tu) < 1e-18 && std::fabs(tv) < 1e-18) break;
    }
    const double pre = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
    const double x4 = std::sqrt(std::sqrt(x));
    return {pre / x4 * su, -pre * x4 * sv};
}

inline AiryPair airy_asymptotic_negative(double x) {
    const double r = -x;
    const double zeta = (2.0 / 3.0) * r * std::sqrt(r);
    // split Σ (-1)^k u_k ζ^{-k} into even/odd parts (cos and sin carriers)
    double uk = 1.0;
    double pe = 1.0, po = 0.0, qe = 1.0, qo = 0.0;  // p: u-sums, q: v-sums
    double zp = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 80; ++k) {
        uk *= double(6 * (k - 1) + 5) * double(6 * (k - 1) + 3) * double(6 * (k - 1) + 1) /
              (216.0 * double(k) * double(2 * k - 1));
        const double vk = -uk * double(6 * k + 1) / double(6 * k - 1);
        zp *= zeta;
        const double tu = uk / zp;
        if (tu >= prev) break;  // stop at the smallest term
        prev = tu;
        // (-1)^m with m = k/2 for even k=2m, and for odd k=2m+1
        if (k % 2 == 0) {
            const double s = (k / 2) % 2 == 0 ? 1.0 : -1.0;
            pe += s * tu;
            qe += s * (vk / zp);
        } else {
            const double s = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
            po += s * tu;
            qo += s * (vk / zp);
        }
        if (tu < 1e-18 && k > 4) break;
    }
    const double c = std::cos(zeta - 0.25 * std::numbers::pi);
    const double s = std::sin(zeta - 0.25 * std::numbers::pi);
    const double r4 = std::sqrt(std::sqrt(r));
    const double invsq = 1.0 / std::sqrt(std::numbers::pi);
    return {invsq / r4 * (c * pe + s * po), invsq * r4 * (s * qe - c * qo)};
}

}  // namespace detail

inline constexpr double kAirySwitchPositive = 5.5;
inline constexpr double kAirySwitchNegative = -9.0;

// Ai(x), Ai'(x); absolute error <= 1e-12 for |x| <= 20.
inline AiryPair airy(double x) {
    if (!std::isfinite(x)) throw DomainError("airy: x must be finite");
    if (x > kAirySwitchPositive) return detail::airy_asymptotic_positive(x);
    if (x < kAirySwitchNegative) return detail::airy_asymptotic_negative(x);
    return detail::airy_series(x);
}

}  // namespace guelab
