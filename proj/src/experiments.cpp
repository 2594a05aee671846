#include "mallows/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "mallows/birth.hpp"
#include "mallows/distribution.hpp"
#include "mallows/info.hpp"
#include "mallows/numeric.hpp"
#include "mallows/uniform.hpp"

namespace mallows {

namespace {

constexpr double kCensored = std::numeric_limits<double>::quiet_NaN();

// contiguous chunks, one per worker; merge order is by chunk index
void parallel_chunks(std::int64_t count, int threads,
                     const std::function<void(int, std::int64_t, std::int64_t)>& body) {
    const int workers = std::max(1, std::min<std::int64_t>(threads, count));
    if (workers == 1) {
        body(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

stats::GofReport bound_report(const std::string& name, double statistic, double threshold,
                              std::int64_t sample_size = 0) {
    stats::GofReport r;
    r.name = name;
    r.test = "bound";
    r.statistic = statistic;
    r.threshold = threshold;
    r.pass = statistic <= threshold;
    r.sample_size = sample_size;
    return r;
}

stats::GofReport count_report(const std::string& name, std::int64_t mismatches) {
    stats::GofReport r;
    r.name = name;
    r.test = "count";
    r.statistic = static_cast<double>(mismatches);
    r.threshold = 0.0;
    r.pass = mismatches == 0;
    return r;
}

stats::GofReport zscore_report(const std::string& name, double value, double target,
                               double se, double z, std::int64_t sample_size) {
    stats::GofReport r;
    r.name = name;
    r.test = "zscore";
    r.statistic = se > 0.0 ? std::abs(value - target) / se
                           : (value == target ? 0.0 : std::numeric_limits<double>::infinity());
    r.threshold = z;
    r.pass = r.statistic <= r.threshold;
    r.sample_size = sample_size;
    return r;
}

stats::GofReport ratio_report(const std::string& name, double value, double target,
                              double rel_tol, std::int64_t sample_size) {
    stats::GofReport r;
    r.name = name;
    r.test = "ratio";
    r.statistic = std::abs(value / target - 1.0);
    r.threshold = rel_tol;
    r.pass = r.statistic <= r.threshold;
    r.sample_size = sample_size;
    return r;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

} // namespace

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<stats::GofReport> validate_marginals(int n, Construction construction,
                                                 const std::vector<double>& t_grid,
                                                 std::int64_t replications, double alpha,
                                                 std::uint64_t seed, int threads) {
    if (n < 1 || n > 8) throw std::invalid_argument("validate_marginals: n must be in 1..8");
    if (t_grid.empty()) throw std::invalid_argument("validate_marginals: empty t grid");
    if (replications < 1) throw std::invalid_argument("validate_marginals: replications >= 1");
    const double horizon = *std::max_element(t_grid.begin(), t_grid.end());
    if (!(horizon > 0.0)) throw std::invalid_argument("validate_marginals: need max t > 0");

    const std::uint64_t cells = factorial_u64(n);
    const int workers = resolve_threads(threads);
    std::vector<std::vector<std::vector<std::int64_t>>> tallies(
        static_cast<std::size_t>(workers),
        std::vector<std::vector<std::int64_t>>(t_grid.size(),
                                               std::vector<std::int64_t>(cells, 0)));

    parallel_chunks(replications, workers, [&](int w, std::int64_t begin, std::int64_t end) {
        for (std::int64_t rep = begin; rep < end; ++rep) {
            const rng::StreamFamily family{seed, static_cast<std::uint64_t>(rep)};
            const ProcessTrajectory traj =
                simulate_process_rejecting(n, horizon, construction, family);
            for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
                const std::uint64_t id = lehmer_rank(inversions_at(traj, t_grid[ti]));
                ++tallies[static_cast<std::size_t>(w)][ti][id];
            }
        }
    });

    std::vector<stats::GofReport> reports;
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
        std::vector<std::int64_t> observed(cells, 0);
        for (int w = 0; w < workers; ++w)
            for (std::uint64_t id = 0; id < cells; ++id)
                observed[id] += tallies[static_cast<std::size_t>(w)][ti][id];
        std::vector<double> expected(cells, 0.0);
        const MallowsParams params{n, t_grid[ti]};
        for (std::uint64_t id = 0; id < cells; ++id)
            expected[id] = pmf(phi(lehmer_unrank(n, id)), params);
        auto report = stats::chi_square("marginal_" + construction_name(construction) +
                                            "_n" + std::to_string(n) + "_t" +
                                            std::to_string(t_grid[ti]),
                                        observed, expected, replications, alpha);
        reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<stats::GofReport> validate_jump_law(int n, int k_max,
                                                std::int64_t replications, double horizon,
                                                double alpha, std::uint64_t seed,
                                                int threads, Construction construction) {
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (k_max < 1 || k_max > pairs)
        throw std::invalid_argument("validate_jump_law: k_max out of range");

    std::vector<std::vector<double>> samples(
        static_cast<std::size_t>(k_max),
        std::vector<double>(static_cast<std::size_t>(replications), kCensored));
    parallel_chunks(replications, resolve_threads(threads),
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t rep = begin; rep < end; ++rep) {
                            const rng::StreamFamily family{seed,
                                                           static_cast<std::uint64_t>(rep)};
                            const ProcessTrajectory traj = simulate_process_rejecting(
                                n, horizon, construction, family);
                            for (int k = 1; k <= k_max; ++k) {
                                if (static_cast<std::size_t>(k) <= traj.events.size())
                                    samples[static_cast<std::size_t>(k - 1)]
                                           [static_cast<std::size_t>(rep)] =
                                               traj.events[static_cast<std::size_t>(k - 1)].t;
                            }
                        }
                    });

    std::vector<stats::GofReport> reports;
    for (int k = 1; k <= k_max; ++k) {
        std::vector<double> kept;
        kept.reserve(static_cast<std::size_t>(replications));
        for (double v : samples[static_cast<std::size_t>(k - 1)])
            if (!std::isnan(v)) kept.push_back(v);
        // law conditioned on T_k <= horizon; censored replications drop out
        const double cdf_at_horizon = 1.0 - exact_jump_time_sf(n, k, horizon);
        auto report = stats::ks_test(
            "jump_time_T" + std::to_string(k) + "_n" + std::to_string(n),
            stats::EmpiricalSample(std::move(kept)),
            [n, k, cdf_at_horizon](double x) {
                return (1.0 - exact_jump_time_sf(n, k, x)) / cdf_at_horizon;
            },
            alpha);
        reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<stats::GofReport> validate_poisson(int n, int k, std::int64_t replications,
                                               double alpha, std::uint64_t seed,
                                               int threads, Construction construction) {
    if (k < 2) throw std::invalid_argument("validate_poisson: k must be >= 2");
    const double horizon = (4.0 * k + 40.0) / static_cast<double>(n);

    std::vector<std::vector<double>> arrivals(
        static_cast<std::size_t>(replications));
    parallel_chunks(replications, resolve_threads(threads),
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t rep = begin; rep < end; ++rep) {
                            const rng::StreamFamily family{seed,
                                                           static_cast<std::uint64_t>(rep)};
                            const ProcessTrajectory traj = simulate_process_rejecting(
                                n, horizon, construction, family);
                            if (traj.events.size() < static_cast<std::size_t>(k))
                                continue; // censored: k-th jump past the horizon
                            auto& row = arrivals[static_cast<std::size_t>(rep)];
                            row.resize(static_cast<std::size_t>(k));
                            for (int i = 0; i < k; ++i)
                                row[static_cast<std::size_t>(i)] =
                                    static_cast<double>(n) *
                                    traj.events[static_cast<std::size_t>(i)].t;
                        }
                    });

    std::vector<std::vector<double>> complete;
    complete.reserve(arrivals.size());
    for (auto& row : arrivals)
        if (!row.empty()) complete.push_back(std::move(row));

    std::vector<stats::GofReport> reports;
    std::vector<double> kth;
    kth.reserve(complete.size());
    for (const auto& row : complete) kth.push_back(row.back());
    reports.push_back(stats::ks_test(
        "nT" + std::to_string(k) + "_erlang", stats::EmpiricalSample(std::move(kth)),
        [k](double x) { return stats::erlang_cdf(k, x); }, alpha));

    const auto check = stats::poisson_point_check(complete, alpha);
    for (const auto& spacing : check.spacing_tests) reports.push_back(spacing);
    for (const auto& corr : check.correlations) {
        reports.push_back(bound_report("corr_gap" + std::to_string(corr.first) + "_gap" +
                                           std::to_string(corr.second),
                                       std::abs(corr.rho), corr.limit,
                                       static_cast<std::int64_t>(complete.size())));
    }
    return reports;
}

GraphValidation validate_graph(int n, std::int64_t replications, double horizon,
                               double coverage_target, std::uint64_t seed, int threads,
                               Construction construction) {
    GraphValidation out;
    const HypercubeGraph graph = build_hypercube(n);
    out.reports.push_back(count_report(
        "edge_count_n" + std::to_string(n),
        static_cast<std::int64_t>(graph.edges.size()) -
            static_cast<std::int64_t>(HypercubeGraph::expected_edge_count(n))));

    const auto generators = generator_set(graph);
    const auto transpositions = all_transpositions(n);
    out.reports.push_back(
        count_report("generator_set_n" + std::to_string(n),
                     generators == transpositions ? 0 : 1));

    if (replications > 0) {
        const int workers = resolve_threads(threads);
        std::vector<StructureReport> partials(static_cast<std::size_t>(workers));
        parallel_chunks(replications, workers, [&](int w, std::int64_t begin, std::int64_t end) {
            std::vector<ProcessTrajectory> batch;
            batch.reserve(static_cast<std::size_t>(end - begin));
            for (std::int64_t rep = begin; rep < end; ++rep) {
                const rng::StreamFamily family{seed, static_cast<std::uint64_t>(rep)};
                batch.push_back(
                    simulate_process_rejecting(n, horizon, construction, family));
            }
            partials[static_cast<std::size_t>(w)] = certify_structure(n, batch);
        });
        StructureReport merged;
        merged.n = n;
        for (const auto& part : partials) {
            merged.trajectories += part.trajectories;
            merged.transitions += part.transitions;
            merged.edge_violations += part.edge_violations;
            merged.quotient_violations += part.quotient_violations;
            for (const auto& [edge, count] : part.edge_counts)
                merged.edge_counts[edge] += count;
            merged.observed_generators.insert(part.observed_generators.begin(),
                                              part.observed_generators.end());
        }
        bool adjacent = true;
        for (int i = 1; i < n; ++i)
            adjacent = adjacent && merged.observed_generators.count(
                                       transposition_permutation(n, {i, i + 1})) > 0;
        merged.adjacent_covered = n == 1 ? true : adjacent;
        merged.edge_coverage =
            static_cast<double>(merged.edge_counts.size()) /
            std::max<double>(1.0, static_cast<double>(graph.edges.size()));
        out.structure = merged;

        out.reports.push_back(count_report(
            "transition_edges_in_hypercube_n" + std::to_string(n),
            static_cast<std::int64_t>(merged.edge_violations)));
        out.reports.push_back(count_report(
            "transition_quotients_transpositions_n" + std::to_string(n),
            static_cast<std::int64_t>(merged.quotient_violations)));
        out.reports.push_back(count_report(
            "adjacent_transpositions_observed_n" + std::to_string(n),
            merged.adjacent_covered ? 0 : 1));
        stats::GofReport coverage;
        coverage.name = "edge_coverage_n" + std::to_string(n);
        coverage.test = "bound";
        coverage.statistic = merged.edge_coverage;
        coverage.threshold = coverage_target;
        coverage.pass = merged.edge_coverage >= coverage_target;
        coverage.sample_size = static_cast<std::int64_t>(merged.trajectories);
        out.reports.push_back(std::move(coverage));
    }
    return out;
}

std::vector<stats::GofReport> validate_info_tu(int n, std::int64_t replications,
                                               double alpha, std::uint64_t seed,
                                               int threads) {
    if (n < 2) throw std::invalid_argument("validate_info_tu: n must be >= 2");
    std::vector<double> sample(static_cast<std::size_t>(replications));
    parallel_chunks(replications, resolve_threads(threads),
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t rep = begin; rep < end; ++rep) {
                            const rng::StreamFamily family{seed,
                                                           static_cast<std::uint64_t>(rep)};
                            const InfoPath path(UniformDriver::sample(n, family));
                            sample[static_cast<std::size_t>(rep)] =
                                full_retrieval_time(path);
                        }
                    });
    std::vector<stats::GofReport> reports;
    reports.push_back(stats::ks_test(
        "T_U_n" + std::to_string(n), stats::EmpiricalSample(std::move(sample)),
        [n](double x) { return full_retrieval_cdf(n, x); }, alpha));
    return reports;
}

std::vector<stats::GofReport> validate_info_moments(int n, std::int64_t replications,
                                                    double z, std::uint64_t seed,
                                                    int threads) {
    std::vector<double> fractions(static_cast<std::size_t>(replications));
    parallel_chunks(replications, resolve_threads(threads),
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t rep = begin; rep < end; ++rep) {
                            const rng::StreamFamily family{seed,
                                                           static_cast<std::uint64_t>(rep)};
                            const InfoPath path(UniformDriver::sample(n, family));
                            fractions[static_cast<std::size_t>(rep)] =
                                info_fraction(path, 1.0);
                        }
                    });
    const auto m = stats::moments(fractions);
    std::vector<stats::GofReport> reports;
    reports.push_back(zscore_report("info_mean_t1_n" + std::to_string(n), m.mean,
                                    expected_info(n, 1.0), m.mean_se, z, replications));
    reports.push_back(zscore_report("info_var_t1_n" + std::to_string(n), m.variance,
                                    var_info_at_1(n), m.variance_se, z, replications));
    return reports;
}

std::vector<stats::GofReport> validate_info_brownian(int n, std::int64_t replications,
                                                     const std::vector<double>& t_grid,
                                                     double rel_tol, std::uint64_t seed,
                                                     int threads) {
    std::vector<std::vector<double>> scaled(
        t_grid.size(), std::vector<double>(static_cast<std::size_t>(replications)));
    parallel_chunks(replications, resolve_threads(threads),
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t rep = begin; rep < end; ++rep) {
                            const rng::StreamFamily family{seed,
                                                           static_cast<std::uint64_t>(rep)};
                            const InfoPath path(UniformDriver::sample(n, family));
                            for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
                                const double frac = info_fraction(path, t_grid[ti]);
                                scaled[ti][static_cast<std::size_t>(rep)] =
                                    std::sqrt(static_cast<double>(n)) *
                                    (frac - t_grid[ti]);
                            }
                        }
                    });
    std::vector<stats::GofReport> reports;
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
        const double t = t_grid[ti];
        const auto m = stats::moments(scaled[ti]);
        reports.push_back(ratio_report("bridge_var_t" + std::to_string(t) + "_n" +
                                           std::to_string(n),
                                       m.variance, t * (1.0 - t), rel_tol, replications));
    }
    return reports;
}

stats::GofReport validate_info_tail(int n, double t, double low, double high) {
    const double value = t * (1.0 - full_retrieval_cdf(n, t));
    stats::GofReport r;
    r.name = "tail_tP_n" + std::to_string(n);
    r.test = "bound";
    r.statistic = value;
    r.threshold = high;
    r.pass = value >= low && value <= high;
    return r;
}

stats::GofReport validate_info_mgf(int n, double t, double u, std::int64_t replications,
                                   double z, std::uint64_t seed, int threads) {
    std::vector<double> powers(static_cast<std::size_t>(replications));
    parallel_chunks(replications, resolve_threads(threads),
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t rep = begin; rep < end; ++rep) {
                            const rng::StreamFamily family{seed,
                                                           static_cast<std::uint64_t>(rep)};
                            const InfoPath path(UniformDriver::sample(n, family));
                            int missing = 0;
                            for (double threshold : path.first_jump_times())
                                if (threshold > t) ++missing;
                            powers[static_cast<std::size_t>(rep)] =
                                u == 0.0 ? (missing == 0 ? 1.0 : 0.0)
                                         : std::pow(u, missing);
                        }
                    });
    const auto m = stats::moments(powers);
    const auto target = limit_mgf_nonretrieved(t, u, std::max(n, 200));
    auto report = zscore_report("info_mgf_t" + std::to_string(t) + "_u" + std::to_string(u),
                                m.mean, target.value, m.mean_se, z, replications);
    return report;
}

std::vector<stats::GofReport> validate_clt(int n, double t, std::int64_t replications,
                                           double z, double rel_tol, std::uint64_t seed,
                                           int threads, Construction construction) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("validate_clt: need t in (0,1)");
    std::vector<double> normalized(static_cast<std::size_t>(replications));
    parallel_chunks(replications, resolve_threads(threads),
                    [&](int, std::int64_t begin, std::int64_t end) {
                        for (std::int64_t rep = begin; rep < end; ++rep) {
                            const rng::StreamFamily family{seed,
                                                           static_cast<std::uint64_t>(rep)};
                            const ProcessTrajectory traj = simulate_process_rejecting(
                                n, t, construction, family);
                            const double jumps =
                                static_cast<double>(jump_count_at(traj, t));
                            normalized[static_cast<std::size_t>(rep)] =
                                ((1.0 - t) * jumps - n * t) /
                                std::sqrt(static_cast<double>(n));
                        }
                    });
    const auto m = stats::moments(normalized);
    std::vector<stats::GofReport> reports;
    reports.push_back(zscore_report("jumps_norm_mean_t" + std::to_string(t), m.mean, 0.0,
                                    m.mean_se, z, replications));
    reports.push_back(ratio_report("jumps_norm_var_t" + std::to_string(t), m.variance, t,
                                   rel_tol, replications));
    return reports;
}

std::vector<stats::GofReport> validate_rates(int grid_j_max, int forward_j_max,
                                             double forward_tol) {
    std::vector<stats::GofReport> reports;

    double most_negative = 0.0;
    double worst_absorbing = 0.0;
    for (int j = 1; j <= grid_j_max; ++j) {
        for (int gi = 0; gi < 200; ++gi) {
            const double t = 10.0 * gi / 199.0;
            for (int k = 0; k <= j - 1; ++k) {
                const double p = birth_rate(j, t, k);
                most_negative = std::min(most_negative, p);
            }
            worst_absorbing = std::max(worst_absorbing, std::abs(birth_rate(j, t, j - 1)));
        }
    }
    reports.push_back(bound_report("rate_nonnegative_grid", -most_negative, 0.0));
    reports.push_back(bound_report("rate_absorbing_zero", worst_absorbing, 1e-12));

    const double h = 1e-4;
    double worst_residual = 0.0;
    for (int j = 2; j <= forward_j_max; ++j) {
        for (double t : {0.05, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0}) {
            for (int k = 0; k + 1 <= j - 1; ++k) {
                const double lhs = (birth_marginal_pmf(j, t + h, k + 1) -
                                    birth_marginal_pmf(j, t - h, k + 1)) /
                                   (2.0 * h);
                const double rhs =
                    birth_rate(j, t, k) * birth_marginal_pmf(j, t, k) -
                    birth_rate(j, t, k + 1) * birth_marginal_pmf(j, t, k + 1);
                worst_residual = std::max(worst_residual, std::abs(lhs - rhs));
            }
        }
    }
    reports.push_back(bound_report("forward_equation_residual", worst_residual, forward_tol));
    return reports;
}

std::vector<stats::GofReport> validate_oracles(std::uint64_t seed) {
    std::vector<stats::GofReport> reports;

    // bijection round trips, exhaustive to n = 6, against the naive builder
    std::int64_t bijection_mismatches = 0;
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t cells = factorial_u64(n);
        for (std::uint64_t id = 0; id < cells; ++id) {
            const InversionVector inv = lehmer_unrank(n, id);
            const Permutation sigma = phi(inv);
            if (phi_inv(sigma) != inv) ++bijection_mismatches;
            if (phi_reference(inv) != sigma) ++bijection_mismatches;
            if (phi(phi_inv(sigma)) != sigma) ++bijection_mismatches;
        }
    }
    reports.push_back(count_report("phi_bijection_exhaustive", bijection_mismatches));

    // randomized round trips at larger sizes
    std::int64_t random_mismatches = 0;
    rng::Stream stream = rng::substream(seed, 0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(stream.below(63));
        std::vector<int> entries(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j)
            entries[static_cast<std::size_t>(j - 1)] =
                static_cast<int>(stream.below(static_cast<std::uint64_t>(j)));
        const InversionVector inv(entries);
        const Permutation sigma = phi(inv);
        if (phi_inv(sigma) != inv || phi_reference(inv) != sigma) ++random_mismatches;
    }
    reports.push_back(count_report("phi_bijection_random_n64", random_mismatches));

    // inversion-count table vs direct enumeration
    std::int64_t table_mismatches = 0;
    for (int n = 1; n <= 8; ++n) {
        const InversionCountTable table = inversion_count_table(n);
        std::vector<std::int64_t> brute(table.counts.size(), 0);
        std::vector<int> values(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i;
        do {
            ++brute[static_cast<std::size_t>(inv_count(Permutation(values)))];
        } while (std::next_permutation(values.begin(), values.end()));
        for (std::size_t ell = 0; ell < brute.size(); ++ell)
            if (static_cast<unsigned __int128>(brute[ell]) != table.counts[ell])
                ++table_mismatches;
    }
    reports.push_back(count_report("inversion_table_brute_force", table_mismatches));

    // quadrature against the closed-form level-0 hazard
    double worst_hazard = 0.0;
    rng::Stream hazard_stream = rng::substream(seed, 0, 2);
    for (int j = 2; j <= 12; ++j) {
        for (int trial = 0; trial < 50; ++trial) {
            const double s = 5.0 * hazard_stream.uniform01();
            const double t = s + 5.0 * hazard_stream.uniform01();
            const double quad = integrated_hazard(j, 0, s, t);
            const double closed =
                numeric::log_geometric_sum(j, t) - numeric::log_geometric_sum(j, s);
            worst_hazard = std::max(worst_hazard, std::abs(quad - closed));
        }
    }
    reports.push_back(bound_report("hazard_quadrature_vs_closed_form", worst_hazard, 1e-9));

    // uniform coordinate trajectories vs the level function on a dense grid
    std::int64_t level_mismatches = 0;
    rng::Stream level_stream = rng::substream(seed, 0, 3);
    for (int j : {2, 3, 6, 10, 17}) {
        for (int trial = 0; trial < 20; ++trial) {
            const double u = level_stream.uniform01();
            const double horizon = 0.5 + 4.0 * level_stream.uniform01();
            const CoordinateTrajectory traj = simulate_uniform_coordinate(j, horizon, u);
            for (int gi = 0; gi < 1000; ++gi) {
                const double t = horizon * gi / 999.0;
                if (traj.level_at(t) != level_function(j, t, u)) ++level_mismatches;
            }
        }
    }
    reports.push_back(count_report("uniform_levels_vs_jump_times", level_mismatches));

    return reports;
}

std::vector<ProcessTrajectory> simulate_batch(int n, double horizon,
                                              Construction construction,
                                              std::int64_t replications,
                                              std::uint64_t seed, int threads,
                                              std::uint64_t* tie_count) {
    std::vector<ProcessTrajectory> out(static_cast<std::size_t>(replications),
                                       ProcessTrajectory{n, horizon, construction, {}});
    const int workers = resolve_threads(threads);
    std::vector<std::uint64_t> ties(static_cast<std::size_t>(workers), 0);
    parallel_chunks(replications, workers, [&](int w, std::int64_t begin, std::int64_t end) {
        for (std::int64_t rep = begin; rep < end; ++rep) {
            const rng::StreamFamily family{seed, static_cast<std::uint64_t>(rep)};
            out[static_cast<std::size_t>(rep)] = simulate_process_rejecting(
                n, horizon, construction, family, &ties[static_cast<std::size_t>(w)]);
        }
    });
    if (tie_count)
        for (std::uint64_t t : ties) *tie_count += t;
    return out;
}

} // namespace mallows
