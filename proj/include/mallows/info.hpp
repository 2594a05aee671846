#pragma once

#include <vector>

#include "mallows/uniform.hpp"

namespace mallows {

// Retrievability record of one uniform-construction path: the driver value
// U_j becomes retrievable the first time coordinate j jumps, so everything
// reduces to the first-jump times T^j_1. Coordinate 1 never jumps.
class InfoPath {
public:
    explicit InfoPath(const UniformDriver& driver);

    int size() const { return static_cast<int>(first_jump_.size()); }
    // +infinity for j = 1 (never retrievable)
    double first_jump_time(int j) const { return first_jump_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<double>& first_jump_times() const { return first_jump_; }

private:
    std::vector<double> first_jump_;
};

// Fraction of the drivers retrievable by time t; at most (n-1)/n since the
// first coordinate carries no information.
double info_fraction(const InfoPath& path, double t);

// max_j T^j_1 over j >= 2: first time every driver is retrievable.
double full_retrieval_time(const InfoPath& path);

// P(full retrieval before t) = prod_{j=2}^n (1 - 1 / sum_{l<j} t^l).
double full_retrieval_cdf(int n, double t);

// E[fraction retrievable at t] = (1/n) sum_j (1 - 1 / sum_{l<j} t^l);
// at t = 1 this is 1 - H_n / n.
double expected_info(int n, double t);

// Var[fraction at t = 1] = (1/n^2) sum_j (j-1)/j^2.
double var_info_at_1(int n);

// Truncation of prod_{k>=1} (1 + (u-1)(t-1)/(t^k - 1)), the limiting
// generating function of the non-retrieved count for t > 1. Factors
// approach 1 geometrically; the remainder bound covers the dropped tail.
struct TruncatedProduct {
    double value;
    double remainder_bound;
    int factors;
};

TruncatedProduct limit_mgf_nonretrieved(double t, double u, int truncation);

} // namespace mallows
