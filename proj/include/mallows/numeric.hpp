#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace mallows::numeric {

// sum_{l=0}^{j-1} t^l, evaluated without cancellation. May overflow to +inf.
inline double geometric_sum(int j, double t) {
    if (j <= 0) return 0.0;
    if (t == 1.0) return static_cast<double>(j);
    double acc = 1.0;
    for (int l = 1; l < j; ++l) acc = acc * t + 1.0;
    return acc;
}

// log(sum_{l=0}^{j-1} t^l), stable for all t >= 0 including t near 1.
inline double log_geometric_sum(int j, double t) {
    if (j <= 0) throw std::invalid_argument("log_geometric_sum: j must be positive");
    if (t < 0.0) throw std::domain_error("log_geometric_sum: t must be non-negative");
    if (t == 0.0 || j == 1) return 0.0;
    const double lt = std::log(t);
    if (lt == 0.0) return std::log(static_cast<double>(j));
    if (lt < 0.0) {
        // (1 - t^j) / (1 - t), both factors via expm1
        return std::log(-std::expm1(j * lt)) - std::log(-std::expm1(lt));
    }
    // t > 1: factor out t^(j-1) so nothing overflows
    return (j - 1) * lt + std::log(-std::expm1(-j * lt)) - std::log(-std::expm1(-lt));
}

// (1 - t^k) / (1 - t^j) for t > 0, continuous through t = 1 (value k/j).
// Strictly decreasing in t for 1 <= k < j.
inline double power_ratio(int k, int j, double t) {
    if (t <= 0.0) return 1.0;
    const double lt = std::log(t);
    if (lt == 0.0) return static_cast<double>(k) / static_cast<double>(j);
    if (lt < 0.0) return std::expm1(k * lt) / std::expm1(j * lt);
    // t > 1: rewrite so no term overflows
    return std::exp((k - j) * lt) * std::expm1(-k * lt) / std::expm1(-j * lt);
}

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double fa,
                      double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                                   double b, double fa, double fb, double fm,
                                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, flm);
    const double right = simpson(f, m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (std::abs(a) + 1.0)) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol)
            throw std::runtime_error("adaptive_simpson: tolerance not reached");
        return left + right + delta / 15.0;
    }
    if (depth <= 0) throw std::runtime_error("adaptive_simpson: tolerance not reached");
    return adaptive_simpson_rec(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}

} // namespace detail

// Adaptive Simpson quadrature with absolute tolerance.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double abs_tol, int max_depth = 48) {
    if (!(a <= b)) throw std::invalid_argument("adaptive_simpson: a must be <= b");
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = detail::simpson(f, a, fa, b, fb, fm);
    return detail::adaptive_simpson_rec(f, a, b, fa, fb, fm, whole, abs_tol, max_depth);
}

// Root of an increasing function g on [lo, hi] with g(lo) <= 0 <= g(hi),
// bisected to the requested relative tolerance on the abscissa.
inline double bisect_increasing(const std::function<double(double)>& g, double lo,
                                double hi, double rel_tol = 1e-12) {
    double glo = g(lo);
    if (glo >= 0.0) return lo;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::max(1.0, std::abs(mid))) return mid;
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Regularized lower incomplete gamma P(a, x).
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::domain_error("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // series expansion
        double term = 1.0 / a, sum = term;
        double ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    // continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    const double q = std::exp(-x + a * std::log(x) - lg) * h;
    return 1.0 - q;
}

// Chi-square quantile: smallest x with P(dof/2, x/2) >= p.
inline double chi_square_quantile(double p, int dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_quantile: dof must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("chi_square_quantile: p in (0,1)");
    double lo = 0.0, hi = static_cast<double>(dof);
    while (gamma_p(dof / 2.0, hi / 2.0) < p) hi *= 2.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo < 1e-10 * std::max(1.0, mid)) return mid;
        if (gamma_p(dof / 2.0, mid / 2.0) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return out;
}

} // namespace mallows::numeric
