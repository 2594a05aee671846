#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "mallows/permutation.hpp"
#include "mallows/process.hpp"

namespace mallows {

// Graph on S_n (vertices keyed by the mixed-radix id of the inversion
// vector) with an edge wherever inversion vectors sit at L1 distance 1.
struct HypercubeGraph {
    int n;
    std::uint64_t vertex_count;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges; // id_a < id_b

    // closed form n! * sum_{j<=n} (j-1)/j, exact in integers
    static std::uint64_t expected_edge_count(int n);
};

// Full graph, guarded to n <= 8.
HypercubeGraph build_hypercube(int n);

// All quotients sigma^-1 . sigma' over both orientations of every edge.
std::set<Permutation> generator_set(const HypercubeGraph& graph);

// True iff the inversion vectors differ by exactly 1 in exactly one slot.
bool is_hypercube_edge(const Permutation& sigma, const Permutation& sigma_prime);

std::set<Permutation> all_transpositions(int n);

// Empirical certificate over simulated paths:
//  (a) every observed transition is a hypercube edge,
//  (b) every observed quotient is a transposition, and the adjacent
//      transpositions all appear,
//  (c) per-edge visit counts and the fraction of the edge set covered.
struct StructureReport {
    int n = 0;
    std::uint64_t trajectories = 0;
    std::uint64_t transitions = 0;
    std::uint64_t edge_violations = 0;
    std::uint64_t quotient_violations = 0;
    bool adjacent_covered = false;
    double edge_coverage = 0.0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> edge_counts;
    std::set<Permutation> observed_generators;

    bool pass() const {
        return edge_violations == 0 && quotient_violations == 0;
    }
};

StructureReport certify_structure(int n, std::span<const ProcessTrajectory> trajectories);

} // namespace mallows
