#include "mallows/process.hpp"

#include <algorithm>
#include <queue>

#include "mallows/birth.hpp"

namespace mallows {

std::string construction_name(Construction c) {
    return c == Construction::birth ? "birth" : "uniform";
}

Construction construction_from_name(const std::string& name) {
    if (name == "birth") return Construction::birth;
    if (name == "uniform") return Construction::uniform;
    throw std::invalid_argument("unknown construction: " + name);
}

namespace {

void check_process_args(int n, double horizon) {
    if (n < 1) throw std::invalid_argument("simulate_process: n must be >= 1");
    if (!(horizon > 0.0)) throw std::invalid_argument("simulate_process: horizon must be positive");
}

// k-way merge of per-coordinate sorted jump lists into one event sequence.
ProcessTrajectory merge_coordinates(int n, double horizon, Construction construction,
                                    const std::vector<CoordinateTrajectory>& coords) {
    struct Head {
        double t;
        int j;
        std::size_t next_idx;
    };
    const auto later = [](const Head& a, const Head& b) { return a.t > b.t; };
    std::priority_queue<Head, std::vector<Head>, decltype(later)> heap(later);
    for (const auto& c : coords)
        if (!c.jump_times.empty()) heap.push({c.jump_times.front(), c.j, 1});

    ProcessTrajectory traj{n, horizon, construction, {}};
    std::vector<int> level(static_cast<std::size_t>(n) + 1, 0);
    double prev = -1.0;
    while (!heap.empty()) {
        const Head head = heap.top();
        heap.pop();
        if (head.t == prev) throw tie_error("simultaneous jumps across coordinates");
        prev = head.t;
        int& lvl = level[static_cast<std::size_t>(head.j)];
        ++lvl;
        traj.events.push_back({head.t, head.j, lvl});
        const auto& times = coords[static_cast<std::size_t>(head.j - 1)].jump_times;
        if (head.next_idx < times.size())
            heap.push({times[head.next_idx], head.j, head.next_idx + 1});
    }
    return traj;
}

} // namespace

ProcessTrajectory simulate_birth_process(int n, double horizon,
                                         const rng::StreamFamily& streams) {
    check_process_args(n, horizon);
    std::vector<CoordinateTrajectory> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        auto stream = streams.coordinate(static_cast<std::uint64_t>(j));
        coords.push_back(simulate_birth_coordinate(j, horizon, stream));
    }
    return merge_coordinates(n, horizon, Construction::birth, coords);
}

ProcessTrajectory simulate_uniform_process(int n, double horizon,
                                           const UniformDriver& driver) {
    check_process_args(n, horizon);
    if (driver.size() != n)
        throw std::invalid_argument("simulate_uniform_process: driver size mismatch");
    std::vector<CoordinateTrajectory> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        coords.push_back(simulate_uniform_coordinate(j, horizon, driver[j]));
    return merge_coordinates(n, horizon, Construction::uniform, coords);
}

ProcessTrajectory simulate_process(int n, double horizon, Construction construction,
                                   const rng::StreamFamily& streams) {
    if (construction == Construction::birth)
        return simulate_birth_process(n, horizon, streams);
    check_process_args(n, horizon);
    return simulate_uniform_process(n, horizon, UniformDriver::sample(n, streams));
}

ProcessTrajectory simulate_process_rejecting(int n, double horizon,
                                             Construction construction,
                                             const rng::StreamFamily& streams,
                                             std::uint64_t* tie_count) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        try {
            if (construction == Construction::birth) {
                check_process_args(n, horizon);
                std::vector<CoordinateTrajectory> coords;
                coords.reserve(static_cast<std::size_t>(n));
                for (int j = 1; j <= n; ++j) {
                    auto stream = streams.coordinate(static_cast<std::uint64_t>(j), attempt);
                    coords.push_back(simulate_birth_coordinate(j, horizon, stream));
                }
                return merge_coordinates(n, horizon, Construction::birth, coords);
            }
            check_process_args(n, horizon);
            std::vector<double> u(static_cast<std::size_t>(n));
            for (int j = 1; j <= n; ++j) {
                auto stream = streams.coordinate(static_cast<std::uint64_t>(j), attempt);
                u[static_cast<std::size_t>(j - 1)] = stream.uniform01();
            }
            return simulate_uniform_process(n, horizon, UniformDriver(std::move(u)));
        } catch (const tie_error&) {
            if (tie_count) ++*tie_count;
            if (attempt > 64) throw; // not randomness at this point
        }
    }
}

InversionVector inversions_at(const ProcessTrajectory& traj, double t) {
    if (!(t >= 0.0 && t <= traj.horizon))
        throw std::out_of_range("state query outside [0, horizon]");
    std::vector<int> entries(static_cast<std::size_t>(traj.n), 0);
    for (const auto& e : traj.events) {
        if (e.t > t) break;
        entries[static_cast<std::size_t>(e.j - 1)] = e.k;
    }
    return InversionVector(std::move(entries));
}

Permutation state_at(const ProcessTrajectory& traj, double t) {
    return phi(inversions_at(traj, t));
}

std::vector<double> jumping_times(const ProcessTrajectory& traj) {
    std::vector<double> times;
    times.reserve(traj.events.size());
    for (const auto& e : traj.events) times.push_back(e.t);
    return times;
}

std::int64_t jump_count_at(const ProcessTrajectory& traj, double t) {
    if (!(t >= 0.0 && t <= traj.horizon))
        throw std::out_of_range("state query outside [0, horizon]");
    const auto past = std::upper_bound(
        traj.events.begin(), traj.events.end(), t,
        [](double value, const ProcessEvent& e) { return value < e.t; });
    return past - traj.events.begin();
}

std::vector<std::pair<Permutation, Permutation>> transition_edges(
    const ProcessTrajectory& traj) {
    std::vector<std::pair<Permutation, Permutation>> edges;
    edges.reserve(traj.events.size());
    std::vector<int> entries(static_cast<std::size_t>(traj.n), 0);
    Permutation before = Permutation::identity(traj.n);
    for (const auto& e : traj.events) {
        entries[static_cast<std::size_t>(e.j - 1)] = e.k;
        Permutation after = phi(InversionVector(entries));
        edges.emplace_back(before, after);
        before = std::move(after);
    }
    return edges;
}

} // namespace mallows
