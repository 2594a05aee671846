#include "mallows/info.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mallows/numeric.hpp"

namespace mallows {

InfoPath::InfoPath(const UniformDriver& driver) {
    first_jump_.resize(static_cast<std::size_t>(driver.size()));
    first_jump_[0] = std::numeric_limits<double>::infinity();
    for (int j = 2; j <= driver.size(); ++j)
        first_jump_[static_cast<std::size_t>(j - 1)] = coordinate_jump_time(j, 1, driver[j]);
}

double info_fraction(const InfoPath& path, double t) {
    if (!(t >= 0.0)) throw std::domain_error("info_fraction: t must be non-negative");
    int retrievable = 0;
    for (double threshold : path.first_jump_times())
        if (threshold <= t) ++retrievable;
    return static_cast<double>(retrievable) / static_cast<double>(path.size());
}

double full_retrieval_time(const InfoPath& path) {
    if (path.size() < 2) throw std::invalid_argument("full_retrieval_time: n must be >= 2");
    double latest = 0.0;
    for (int j = 2; j <= path.size(); ++j)
        latest = std::max(latest, path.first_jump_time(j));
    return latest;
}

double full_retrieval_cdf(int n, double t) {
    if (n < 2) throw std::invalid_argument("full_retrieval_cdf: n must be >= 2");
    if (!(t >= 0.0)) throw std::domain_error("full_retrieval_cdf: t must be non-negative");
    if (t == 0.0) return 0.0;
    double log_cdf = 0.0;
    for (int j = 2; j <= n; ++j)
        log_cdf += std::log1p(-std::exp(-numeric::log_geometric_sum(j, t)));
    return std::exp(log_cdf);
}

double expected_info(int n, double t) {
    if (n < 1) throw std::invalid_argument("expected_info: n must be >= 1");
    if (!(t >= 0.0)) throw std::domain_error("expected_info: t must be non-negative");
    double acc = 0.0;
    for (int j = 2; j <= n; ++j)
        acc += -std::expm1(-numeric::log_geometric_sum(j, t));
    return acc / static_cast<double>(n);
}

double var_info_at_1(int n) {
    if (n < 1) throw std::invalid_argument("var_info_at_1: n must be >= 1");
    double acc = 0.0;
    for (int j = 1; j <= n; ++j)
        acc += static_cast<double>(j - 1) / (static_cast<double>(j) * j);
    return acc / (static_cast<double>(n) * n);
}

TruncatedProduct limit_mgf_nonretrieved(double t, double u, int truncation) {
    if (!(t > 1.0)) throw std::domain_error("limit_mgf_nonretrieved: t must exceed 1");
    if (truncation < 1)
        throw std::invalid_argument("limit_mgf_nonretrieved: truncation must be >= 1");
    double value = 1.0;
    for (int k = 1; k <= truncation; ++k) {
        const double factor = 1.0 + (u - 1.0) * (t - 1.0) / std::expm1(k * std::log(t));
        value *= factor;
    }
    // dropped factors shrink geometrically: h_{k+1}/h_k <= 1/t
    const double tail_head =
        std::abs(u - 1.0) * (t - 1.0) / std::expm1((truncation + 1) * std::log(t));
    double remainder = std::numeric_limits<double>::infinity();
    if (tail_head <= 0.5) {
        const double tail_log = 2.0 * tail_head / (1.0 - 1.0 / t);
        remainder = std::abs(value) * std::expm1(tail_log);
    }
    return {value, remainder, truncation};
}

} // namespace mallows
