#pragma once

#include <vector>

#include "mallows/birth.hpp" // CoordinateTrajectory
#include "mallows/rng.hpp"

namespace mallows {

// The n stored uniforms driving a uniform-construction process. Entries
// strictly inside (0,1); 0 and 1 are rejected at construction.
class UniformDriver {
public:
    explicit UniformDriver(std::vector<double> u);

    static UniformDriver sample(int n, const rng::StreamFamily& streams);

    int size() const { return static_cast<int>(u_.size()); }
    double operator[](int j) const { return u_[static_cast<std::size_t>(j - 1)]; } // one-based
    const std::vector<double>& values() const { return u_; }

private:
    std::vector<double> u_;
};

// Level of coordinate j at time t under driver value u:
//   0 at t = 0, floor(j*u) at t = 1, floor(log(1 - u(1 - t^j)) / log t)
// otherwise. Non-decreasing in t with values in {0..j-1}. Near t = 1 the
// floor formula cancels catastrophically, so |t-1| < 1e-6 switches to the
// equivalent half-open interval test on u.
int level_function(int j, double t, double u);

// Unique t > 0 with u = (1 - t^k) / (1 - t^j), i.e. inf{t : level >= k}.
// Bisection on the strictly decreasing boundary map, 1e-12 relative.
double coordinate_jump_time(int j, int k, double u);

CoordinateTrajectory simulate_uniform_coordinate(int j, double horizon, double u);

} // namespace mallows
