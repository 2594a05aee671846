#include "mallows/uniform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mallows/numeric.hpp"

namespace mallows {

namespace {

void check_u(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("uniform driver value must lie strictly in (0,1)");
}

constexpr double kIntervalSwitch = 1e-6; // |t-1| below this uses the interval test

} // namespace

UniformDriver::UniformDriver(std::vector<double> u) : u_(std::move(u)) {
    if (u_.empty()) throw std::invalid_argument("UniformDriver: size must be positive");
    for (double v : u_) check_u(v);
}

UniformDriver UniformDriver::sample(int n, const rng::StreamFamily& streams) {
    if (n <= 0) throw std::invalid_argument("UniformDriver: size must be positive");
    std::vector<double> u(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        auto stream = streams.coordinate(static_cast<std::uint64_t>(j));
        u[static_cast<std::size_t>(j - 1)] = stream.uniform01();
    }
    return UniformDriver(std::move(u));
}

int level_function(int j, double t, double u) {
    if (j < 1) throw std::invalid_argument("level_function: j must be >= 1");
    check_u(u);
    if (!(t >= 0.0)) throw std::domain_error("level_function: t must be non-negative");
    if (t == 0.0 || j == 1) return 0;
    if (t == 1.0) return static_cast<int>(j * u);
    if (std::abs(t - 1.0) < kIntervalSwitch) {
        // largest k with (t^k - 1)/(t^j - 1) <= u, boundaries left-closed
        int lo = 0, hi = j - 1;
        while (lo < hi) {
            const int mid = (lo + hi + 1) / 2;
            if (numeric::power_ratio(mid, j, t) <= u)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }
    const double lt = std::log(t);
    double level;
    if (j * lt > 700.0) {
        // t^j overflows; log(1 + u(t^j - 1)) ~ log u + j log t
        level = static_cast<double>(j) + std::log(u) / lt;
    } else {
        level = std::log1p(u * std::expm1(j * lt)) / lt;
    }
    return std::clamp(static_cast<int>(std::floor(level)), 0, j - 1);
}

double coordinate_jump_time(int j, int k, double u) {
    if (j < 1) throw std::invalid_argument("coordinate_jump_time: j must be >= 1");
    if (k < 1 || k > j - 1)
        throw std::invalid_argument("coordinate_jump_time: k must lie in [1, j-1]");
    check_u(u);
    // boundary map g(t) = (1 - t^k)/(1 - t^j) decreases from 1 to 0;
    // bisect in log t so the tolerance is relative for roots of any size
    double lo = 1.0, hi = 1.0;
    while (numeric::power_ratio(k, j, lo) < u) lo *= 0.5;
    while (numeric::power_ratio(k, j, hi) > u) hi *= 2.0;
    double xlo = std::log(lo), xhi = std::log(hi);
    while (xhi - xlo > 1e-12) {
        const double xmid = 0.5 * (xlo + xhi);
        if (numeric::power_ratio(k, j, std::exp(xmid)) >= u)
            xlo = xmid;
        else
            xhi = xmid;
    }
    return std::exp(0.5 * (xlo + xhi));
}

CoordinateTrajectory simulate_uniform_coordinate(int j, double horizon, double u) {
    if (j < 1) throw std::invalid_argument("simulate_uniform_coordinate: j must be >= 1");
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_uniform_coordinate: horizon must be positive");
    check_u(u);
    CoordinateTrajectory traj{j, {}, horizon};
    const int final_level = level_function(j, horizon, u);
    for (int k = 1; k <= final_level; ++k) {
        const double t = coordinate_jump_time(j, k, u);
        if (t > horizon) break; // boundary rounding: censor, never clamp
        traj.jump_times.push_back(t);
    }
    return traj;
}

} // namespace mallows
