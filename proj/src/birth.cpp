#include "mallows/birth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "mallows/numeric.hpp"

namespace mallows {

namespace {

void check_level(int j, int k) {
    if (j < 1) throw std::invalid_argument("birth: j must be >= 1");
    if (k < 0 || k > j - 1) throw std::invalid_argument("birth: level k out of [0, j-1]");
}

// Numerator coefficient of t^l, 0 <= l <= j-2. Non-negative for every level.
std::int64_t rate_coefficient(int j, int k, int l) {
    std::int64_t c = static_cast<std::int64_t>(k + 1) * (l + 1);
    if (l >= j - k - 2) c -= static_cast<std::int64_t>(j) * (l - j + k + 2);
    return c;
}

} // namespace

int CoordinateTrajectory::level_at(double t) const {
    return static_cast<int>(std::upper_bound(jump_times.begin(), jump_times.end(), t) -
                            jump_times.begin());
}

double birth_rate(int j, double t, int k) {
    check_level(j, k);
    if (!(t >= 0.0)) throw std::domain_error("birth_rate: t must be non-negative");
    if (j == 1) return 0.0;
    if (t <= 1.0) {
        double numer = 0.0;
        for (int l = j - 2; l >= 0; --l)
            numer = numer * t + static_cast<double>(rate_coefficient(j, k, l));
        return numer / numeric::geometric_sum(j, t);
    }
    // descending powers scaled by t^{j-1}
    const double s = 1.0 / t;
    double numer = 0.0;
    for (int l = 0; l <= j - 2; ++l)
        numer = numer * s + static_cast<double>(rate_coefficient(j, k, l));
    return numer / (t * numeric::geometric_sum(j, s));
}

double birth_marginal_pmf(int j, double t, int k) {
    check_level(j, k);
    if (!(t >= 0.0)) throw std::domain_error("birth_marginal_pmf: t must be non-negative");
    if (t <= 1.0) return std::pow(t, k) / numeric::geometric_sum(j, t);
    const double s = 1.0 / t;
    return std::pow(s, j - 1 - k) / numeric::geometric_sum(j, s);
}

double integrated_hazard(int j, int k, double s, double t, double abs_tol) {
    check_level(j, k);
    if (!(0.0 <= s && s <= t)) throw std::invalid_argument("integrated_hazard: need 0 <= s <= t");
    if (k == j - 1 || s == t) return 0.0;
    return numeric::adaptive_simpson([j, k](double u) { return birth_rate(j, u, k); }, s, t,
                                     abs_tol);
}

namespace {

constexpr double kPanelTol = 1e-12;   // per-panel quadrature budget
constexpr double kTimeRelTol = 1e-12; // bisection tolerance on the jump time

double hazard_panel(int j, int k, double a, double b) {
    return numeric::adaptive_simpson([j, k](double u) { return birth_rate(j, u, k); }, a, b,
                                     kPanelTol);
}

// Root of cumulative hazard = target inside [lo, hi], where the cumulative
// hazard at lo is cum_lo and the panel integrals are computed incrementally.
double invert_hazard_bracket(int j, int k, double lo, double cum_lo, double hi,
                             double target) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= kTimeRelTol * std::max(1.0, std::abs(mid))) return mid;
        const double cum_mid = cum_lo + hazard_panel(j, k, lo, mid);
        if (cum_mid < target) {
            lo = mid;
            cum_lo = cum_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::optional<double> sample_next_jump(int j, int k, double s, double horizon,
                                       rng::Stream& stream) {
    check_level(j, k);
    if (!(s >= 0.0)) throw std::invalid_argument("sample_next_jump: s must be non-negative");
    if (k == j - 1 || horizon <= s) return std::nullopt;

    const double target = stream.exponential();

    if (k == 0) {
        // hazard from level 0 integrates in closed form to log sum_{l<j} t^l
        const double base = numeric::log_geometric_sum(j, s);
        if (numeric::log_geometric_sum(j, horizon) - base < target) return std::nullopt;
        return numeric::bisect_increasing(
            [j, base, target](double t) {
                return numeric::log_geometric_sum(j, t) - base - target;
            },
            s, horizon, kTimeRelTol);
    }

    // bracket by interval doubling with incremental quadrature
    const double r0 = birth_rate(j, s, k);
    double step = r0 > 0.0 ? std::min(0.5 * target / r0 + 1e-9, horizon - s) : 1.0;
    double left = s, cum = 0.0;
    while (left < horizon) {
        const double right = std::min(left + step, horizon);
        const double panel = hazard_panel(j, k, left, right);
        if (cum + panel >= target)
            return invert_hazard_bracket(j, k, left, cum, right, target);
        cum += panel;
        left = right;
        step *= 2.0;
    }
    return std::nullopt;
}

CoordinateTrajectory simulate_birth_coordinate(int j, double horizon, rng::Stream& stream) {
    if (j < 1) throw std::invalid_argument("simulate_birth_coordinate: j must be >= 1");
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_birth_coordinate: horizon must be positive");
    CoordinateTrajectory traj{j, {}, horizon};
    int level = 0;
    double now = 0.0;
    while (level < j - 1) {
        const auto next = sample_next_jump(j, level, now, horizon, stream);
        if (!next) break;
        traj.jump_times.push_back(*next);
        now = *next;
        ++level;
    }
    return traj;
}

} // namespace mallows
