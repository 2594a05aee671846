#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mallows/permutation.hpp"
#include "mallows/rng.hpp"
#include "mallows/uniform.hpp"

namespace mallows {

enum class Construction { birth, uniform };

std::string construction_name(Construction c);
Construction construction_from_name(const std::string& name);

// One jump: coordinate j (one-based) reaches level k at time t.
struct ProcessEvent {
    double t;
    int j;
    int k;
};

// Time-ordered event list of one process path on [0, horizon]. The state at
// time 0 is the identity and every event raises one coordinate by exactly 1,
// so event times are strictly increasing and per-coordinate levels run
// 1, 2, ... consecutively.
struct ProcessTrajectory {
    int n;
    double horizon;
    Construction construction;
    std::vector<ProcessEvent> events;
};

// Exact time ties across coordinates occur with probability zero; hitting
// one signals RNG misuse and is reported rather than ordered arbitrarily.
struct tie_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ProcessTrajectory simulate_birth_process(int n, double horizon,
                                         const rng::StreamFamily& streams);
ProcessTrajectory simulate_uniform_process(int n, double horizon,
                                           const UniformDriver& driver);
ProcessTrajectory simulate_process(int n, double horizon, Construction construction,
                                   const rng::StreamFamily& streams);

// Rejection wrapper: on a tie the replication is rethrown with a fresh
// attempt-keyed stream and the rejection is counted.
ProcessTrajectory simulate_process_rejecting(int n, double horizon,
                                             Construction construction,
                                             const rng::StreamFamily& streams,
                                             std::uint64_t* tie_count = nullptr);

// State at time t (cadlag: an event at exactly t is included).
Permutation state_at(const ProcessTrajectory& traj, double t);
InversionVector inversions_at(const ProcessTrajectory& traj, double t);

// T_k = time of the k-th event; entries past the horizon are absent.
std::vector<double> jumping_times(const ProcessTrajectory& traj);

// Number of events with time <= t; equals the inversion count of the state.
std::int64_t jump_count_at(const ProcessTrajectory& traj, double t);

// Consecutive (before, after) states at every event time.
std::vector<std::pair<Permutation, Permutation>> transition_edges(
    const ProcessTrajectory& traj);

} // namespace mallows
