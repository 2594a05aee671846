#include "mallows/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mallows/numeric.hpp"

namespace mallows::stats {

EmpiricalSample::EmpiricalSample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("EmpiricalSample: empty sample");
    std::sort(values_.begin(), values_.end());
}

double ks_statistic(const EmpiricalSample& sample,
                    const std::function<double(double)>& cdf) {
    const auto& xs = sample.values();
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return d;
}

double kolmogorov_quantile(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("kolmogorov_quantile: alpha in (0,1)");
    const auto tail = [](double c) {
        double acc = 0.0;
        for (int k = 1; k <= 64; ++k) {
            const double term = std::exp(-2.0 * k * k * c * c);
            acc += (k % 2 == 1 ? term : -term);
            if (term < 1e-18) break;
        }
        return 2.0 * acc;
    };
    double lo = 0.2, hi = 4.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo < 1e-10) return mid;
        if (tail(mid) > alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double ks_threshold(double alpha, std::size_t n) {
    if (n < 1000)
        throw std::invalid_argument("ks_threshold: asymptotic quantile needs N >= 1000");
    return kolmogorov_quantile(alpha) / std::sqrt(static_cast<double>(n));
}

GofReport ks_test(const std::string& name, const EmpiricalSample& sample,
                  const std::function<double(double)>& cdf, double alpha) {
    GofReport report;
    report.name = name;
    report.test = "ks";
    report.sample_size = static_cast<std::int64_t>(sample.count());
    report.statistic = ks_statistic(sample, cdf);
    report.threshold = ks_threshold(alpha, sample.count());
    report.pass = report.statistic <= report.threshold;
    return report;
}

GofReport chi_square(const std::string& name, const std::vector<std::int64_t>& observed,
                     const std::vector<double>& expected_probs, std::int64_t total,
                     double alpha) {
    if (observed.size() != expected_probs.size())
        throw std::invalid_argument("chi_square: length mismatch");
    const std::int64_t observed_total =
        std::accumulate(observed.begin(), observed.end(), std::int64_t{0});
    if (observed_total != total)
        throw std::invalid_argument("chi_square: observed counts do not sum to total");

    GofReport report;
    report.name = name;
    report.test = "chi2";
    report.sample_size = total;

    // impossible-event guard: observed mass where the model puts none
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected_probs[i] == 0.0 && observed[i] > 0) {
            report.statistic = std::numeric_limits<double>::infinity();
            report.threshold = 0.0;
            report.pass = false;
            return report;
        }
    }

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < expected_probs.size(); ++i)
        if (expected_probs[i] > 0.0) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (expected_probs[a] != expected_probs[b])
            return expected_probs[a] < expected_probs[b];
        return a < b;
    });

    // pool ascending until each kept cell expects at least 5
    struct Cell {
        double expected;
        std::int64_t observed;
    };
    std::vector<Cell> cells;
    double acc_e = 0.0;
    std::int64_t acc_o = 0;
    const double minimum = 5.0;
    for (std::size_t idx : order) {
        acc_e += expected_probs[idx] * static_cast<double>(total);
        acc_o += observed[idx];
        if (acc_e >= minimum) {
            cells.push_back({acc_e, acc_o});
            acc_e = 0.0;
            acc_o = 0;
        }
    }
    if (acc_e > 0.0 || acc_o > 0) {
        if (cells.empty()) throw std::invalid_argument("chi_square: degenerate pooling");
        cells.front().expected += acc_e; // front holds the smallest kept cell
        cells.front().observed += acc_o;
    }
    if (cells.size() <= 1) throw std::invalid_argument("chi_square: degenerate pooling");

    double statistic = 0.0;
    for (const auto& cell : cells) {
        const double diff = static_cast<double>(cell.observed) - cell.expected;
        statistic += diff * diff / cell.expected;
    }
    report.statistic = statistic;
    report.dof = static_cast<int>(cells.size()) - 1;
    report.threshold = numeric::chi_square_quantile(1.0 - alpha, report.dof);
    report.pass = report.statistic <= report.threshold;
    return report;
}

double erlang_cdf(int k, double x) {
    if (k < 1) throw std::invalid_argument("erlang_cdf: k must be >= 1");
    if (!(x >= 0.0)) throw std::domain_error("erlang_cdf: x must be non-negative");
    if (x == 0.0) return 0.0;
    double term = 1.0, partial = 1.0;
    for (int l = 1; l < k; ++l) {
        term *= x / static_cast<double>(l);
        partial += term;
    }
    const double tail = std::exp(-x) * partial;
    return tail >= 1.0 ? 0.0 : 1.0 - tail;
}

PoissonCheck poisson_point_check(const std::vector<std::vector<double>>& arrivals,
                                 double alpha) {
    if (arrivals.empty()) throw std::invalid_argument("poisson_point_check: empty input");
    const std::size_t k = arrivals.front().size();
    if (k < 2) throw std::invalid_argument("poisson_point_check: need k >= 2 arrivals");
    for (const auto& row : arrivals)
        if (row.size() != k) throw std::invalid_argument("poisson_point_check: ragged input");

    const std::size_t reps = arrivals.size();
    // gap matrix: first arrival, then consecutive differences
    std::vector<std::vector<double>> gaps(k, std::vector<double>(reps));
    for (std::size_t r = 0; r < reps; ++r) {
        gaps[0][r] = arrivals[r][0];
        for (std::size_t i = 1; i < k; ++i)
            gaps[i][r] = arrivals[r][i] - arrivals[r][i - 1];
    }

    PoissonCheck check;
    const auto exp_cdf = [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); };
    for (std::size_t i = 1; i < k; ++i) {
        check.spacing_tests.push_back(ks_test("spacing_" + std::to_string(i + 1),
                                              EmpiricalSample(gaps[i]), exp_cdf, alpha));
    }

    std::vector<double> mean(k, 0.0), sd(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (double v : gaps[i]) mean[i] += v;
        mean[i] /= static_cast<double>(reps);
        for (double v : gaps[i]) sd[i] += (v - mean[i]) * (v - mean[i]);
        sd[i] = std::sqrt(sd[i] / static_cast<double>(reps - 1));
    }
    const double limit = 4.0 / std::sqrt(static_cast<double>(reps));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            double cov = 0.0;
            for (std::size_t r = 0; r < reps; ++r)
                cov += (gaps[a][r] - mean[a]) * (gaps[b][r] - mean[b]);
            cov /= static_cast<double>(reps - 1);
            const double rho = cov / (sd[a] * sd[b]);
            check.correlations.push_back(
                {static_cast<int>(a + 1), static_cast<int>(b + 1), rho, limit,
                 std::abs(rho) <= limit});
        }
    }

    check.pass = true;
    for (const auto& t : check.spacing_tests) check.pass = check.pass && t.pass;
    for (const auto& c : check.correlations) check.pass = check.pass && c.pass;
    return check;
}

MomentSummary moments(const std::vector<double>& values) {
    if (values.size() < 2) throw std::invalid_argument("moments: need at least 2 values");
    MomentSummary m;
    m.count = values.size();
    const double n = static_cast<double>(values.size());
    for (double v : values) m.mean += v;
    m.mean /= n;
    double m2 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d = v - m.mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m.variance = m2 / (n - 1.0);
    m.mean_se = std::sqrt(m.variance / n);
    const double central4 = m4 / n;
    const double var_of_var =
        (central4 - m.variance * m.variance * (n - 3.0) / (n - 1.0)) / n;
    m.variance_se = std::sqrt(std::max(0.0, var_of_var));
    return m;
}

} // namespace mallows::stats
