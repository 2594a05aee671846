#pragma once

#include <optional>
#include <vector>

#include "mallows/rng.hpp"

namespace mallows {

// Piecewise-constant increasing path of one coordinate: jump_times[k-1] is
// the time the coordinate reached level k. Jumps past the horizon are
// censored, never clamped.
struct CoordinateTrajectory {
    int j;
    std::vector<double> jump_times;
    double horizon;

    int level_at(double t) const; // number of jump times <= t
};

// Jump intensity of the j-th coordinate at level k and time t:
//   p_j(t,k) = [ (k+1) sum_{l<j-1} (l+1) t^l
//                - j sum_{l=j-k-2}^{j-2} (l-j+k+2) t^l ] / sum_{l<j} t^l.
// The merged numerator has non-negative integer coefficients, so the value
// is exactly zero at k = j-1 and never negative. Horner evaluation; for
// t > 1 the sums run in descending powers scaled by t^{j-1}.
double birth_rate(int j, double t, int k);

// P(level at t equals k) = t^k / sum_{l<j} t^l.
double birth_marginal_pmf(int j, double t, int k);

// integral of birth_rate(j, ., k) over [s, t] by adaptive quadrature.
// Throws std::runtime_error if the tolerance cannot be met.
double integrated_hazard(int j, int k, double s, double t, double abs_tol = 1e-10);

// Next jump after time s for a coordinate sitting at level k: draws
// E ~ Exponential(1) and inverts the integrated hazard. Absent when the
// exponential clock does not ring before the horizon or k = j-1.
std::optional<double> sample_next_jump(int j, int k, double s, double horizon,
                                       rng::Stream& stream);

// Event-driven simulation from level 0 at time 0 up to the horizon.
CoordinateTrajectory simulate_birth_coordinate(int j, double horizon,
                                               rng::Stream& stream);

} // namespace mallows
