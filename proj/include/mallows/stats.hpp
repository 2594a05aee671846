#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mallows::stats {

// Sorted sample; sorting happens once at construction.
class EmpiricalSample {
public:
    explicit EmpiricalSample(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t count() const { return values_.size(); }

private:
    std::vector<double> values_;
};

// Outcome of one goodness-of-fit check. pass <=> statistic <= threshold.
// Statistics and thresholds are always reported so logs stay auditable.
struct GofReport {
    std::string name;
    std::string test; // "ks", "chi2", "zscore", "ratio", "bound", "count"
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::int64_t sample_size = 0;
    int dof = -1;
};

// Sup distance between the empirical CDF and a target CDF:
//   D = max_i max(i/N - F(x_(i)), F(x_(i)) - (i-1)/N).
double ks_statistic(const EmpiricalSample& sample,
                    const std::function<double(double)>& cdf);

// Asymptotic Kolmogorov quantile c(alpha): solves
// 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 c^2) = alpha. c(0.001) ~ 1.95.
double kolmogorov_quantile(double alpha);

// c(alpha)/sqrt(N); the asymptotic regime N >= 1000 is enforced.
double ks_threshold(double alpha, std::size_t n);

GofReport ks_test(const std::string& name, const EmpiricalSample& sample,
                  const std::function<double(double)>& cdf, double alpha);

// Pearson chi-square with deterministic cell pooling: categories are pooled
// in ascending expected order until each kept cell has expected count >= 5.
// Observed mass on a zero-probability category fails hard (infinite
// statistic); pooling down to <= 1 category throws.
GofReport chi_square(const std::string& name, const std::vector<std::int64_t>& observed,
                     const std::vector<double>& expected_probs, std::int64_t total,
                     double alpha);

// Gamma(k, 1) CDF at integer shape: 1 - e^-x sum_{l<k} x^l / l!.
double erlang_cdf(int k, double x);

// Spacing diagnostics for arrival rows (a_1 <= ... <= a_k) against a unit
// Poisson point process: every spacing a_i - a_{i-1} for i >= 2 is tested
// against Exponential(1), and all pairwise gap correlations (the first
// arrival counts as a gap) are flagged beyond 4/sqrt(N).
struct CorrelationFlag {
    int first;
    int second;
    double rho;
    double limit;
    bool pass;
};

struct PoissonCheck {
    std::vector<GofReport> spacing_tests;
    std::vector<CorrelationFlag> correlations;
    bool pass = false;
};

PoissonCheck poisson_point_check(const std::vector<std::vector<double>>& arrivals,
                                 double alpha);

// Mean, variance and standard errors of a sample; the SE of the variance
// uses the fourth central moment.
struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;
    double mean_se = 0.0;
    double variance_se = 0.0;
    std::size_t count = 0;
};

MomentSummary moments(const std::vector<double>& values);

} // namespace mallows::stats
