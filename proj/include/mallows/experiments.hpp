#pragma once

#include <cstdint>
#include <vector>

#include "mallows/hypercube.hpp"
#include "mallows/process.hpp"
#include "mallows/stats.hpp"

namespace mallows {

// Replications are independent work units; each one draws its streams from
// (seed, replication index), so the thread count never changes any result.
int resolve_threads(int threads);

// Monte Carlo drivers behind `validate` and the acceptance suite. Every
// check returns auditable reports (statistic, threshold, pass).

// chi-square of the time-t marginal against the exact law, all t in one
// simulation pass; n <= 8 (full enumeration of S_n).
std::vector<stats::GofReport> validate_marginals(int n, Construction construction,
                                                 const std::vector<double>& t_grid,
                                                 std::int64_t replications, double alpha,
                                                 std::uint64_t seed, int threads);

// KS of the k-th jumping time against the exact finite-n survival function,
// for k = 1..k_max. Replications whose k-th jump lands past the horizon are
// censored: the remaining sample is tested against the law conditioned on
// T_k <= horizon (never extrapolated).
std::vector<stats::GofReport> validate_jump_law(int n, int k_max,
                                                std::int64_t replications, double horizon,
                                                double alpha, std::uint64_t seed,
                                                int threads,
                                                Construction construction = Construction::birth);

// Scaled first arrivals (nT_1..nT_k) against the unit Poisson point
// process: Erlang(k) KS for the k-th arrival, Exponential(1) KS for each
// spacing, pairwise gap correlations bounded by 4/sqrt(N).
std::vector<stats::GofReport> validate_poisson(int n, int k, std::int64_t replications,
                                               double alpha, std::uint64_t seed,
                                               int threads,
                                               Construction construction = Construction::birth);

struct GraphValidation {
    std::vector<stats::GofReport> reports;
    StructureReport structure;
};

// Exhaustive certification of the expanded hypercube (edge count, generator
// set = all transpositions) plus Monte Carlo transition certification.
// coverage_target applies to the fraction of edges observed.
GraphValidation validate_graph(int n, std::int64_t replications, double horizon,
                               double coverage_target, std::uint64_t seed, int threads,
                               Construction construction = Construction::birth);

// Full-retrieval time against the exact product CDF.
std::vector<stats::GofReport> validate_info_tu(int n, std::int64_t replications,
                                               double alpha, std::uint64_t seed,
                                               int threads);

// Mean and variance of the retrievable fraction at t = 1, within z standard
// errors of the closed forms.
std::vector<stats::GofReport> validate_info_moments(int n, std::int64_t replications,
                                                    double z, std::uint64_t seed,
                                                    int threads);

// Variance of sqrt(n) (fraction - t) against t(1-t), within rel_tol.
std::vector<stats::GofReport> validate_info_brownian(int n, std::int64_t replications,
                                                     const std::vector<double>& t_grid,
                                                     double rel_tol, std::uint64_t seed,
                                                     int threads);

// Deterministic tail identity: t * P(T_U > t) inside [low, high].
stats::GofReport validate_info_tail(int n, double t, double low, double high);

// Empirical generating function of the non-retrieved count at t > 1 against
// the truncated limit product, within z Monte Carlo standard errors.
stats::GofReport validate_info_mgf(int n, double t, double u, std::int64_t replications,
                                   double z, std::uint64_t seed, int threads);

// Normalized jump count ((1-t) J_t - nt)/sqrt(n): mean within z standard
// errors of 0, variance within rel_tol of t.
std::vector<stats::GofReport> validate_clt(int n, double t, std::int64_t replications,
                                           double z, double rel_tol, std::uint64_t seed,
                                           int threads,
                                           Construction construction = Construction::uniform);

// Deterministic rate checks: non-negativity and the absorbing level on a
// (j, t) grid, and the finite-difference forward-equation residual.
std::vector<stats::GofReport> validate_rates(int grid_j_max, int forward_j_max,
                                             double forward_tol);

// Exact-structure cross-checks: bijection round trips, count table vs brute
// force, quadrature vs the closed-form level-0 hazard, uniform jump times
// vs the level function on dense grids.
std::vector<stats::GofReport> validate_oracles(std::uint64_t seed);

// Batch simulation used by the CLI.
std::vector<ProcessTrajectory> simulate_batch(int n, double horizon,
                                              Construction construction,
                                              std::int64_t replications,
                                              std::uint64_t seed, int threads,
                                              std::uint64_t* tie_count = nullptr);

} // namespace mallows
