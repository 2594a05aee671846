#include "mallows/hypercube.hpp"

#include <algorithm>
#include <stdexcept>

namespace mallows {

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

} // namespace

std::uint64_t HypercubeGraph::expected_edge_count(int n) {
    // n! * sum_j (j-1)/j = sum_j (j-1) * n!/j, each term an exact integer
    const std::uint64_t nf = factorial(n);
    std::uint64_t total = 0;
    for (int j = 1; j <= n; ++j)
        total += static_cast<std::uint64_t>(j - 1) * (nf / static_cast<std::uint64_t>(j));
    return total;
}

HypercubeGraph build_hypercube(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("build_hypercube: n must be in 1..8");
    const std::uint64_t vertices = factorial(n);
    HypercubeGraph graph{n, vertices, {}};
    std::vector<std::uint64_t> weight(static_cast<std::size_t>(n) + 1, 1);
    for (int j = 1; j <= n; ++j)
        weight[static_cast<std::size_t>(j)] = weight[static_cast<std::size_t>(j - 1)] *
                                              static_cast<std::uint64_t>(j);
    for (std::uint64_t id = 0; id < vertices; ++id) {
        const InversionVector inv = lehmer_unrank(n, id);
        for (int j = 2; j <= n; ++j) {
            if (inv[j - 1] >= j - 1) continue;
            // raising I_j by one adds (j-1)! to the mixed-radix id
            const std::uint64_t neighbor = id + weight[static_cast<std::size_t>(j - 1)];
            graph.edges.emplace_back(id, neighbor);
        }
    }
    return graph;
}

std::set<Permutation> generator_set(const HypercubeGraph& graph) {
    std::set<Permutation> generators;
    for (const auto& [a, b] : graph.edges) {
        const Permutation sigma = phi(lehmer_unrank(graph.n, a));
        const Permutation sigma_prime = phi(lehmer_unrank(graph.n, b));
        generators.insert(compose(sigma.inverse(), sigma_prime));
        generators.insert(compose(sigma_prime.inverse(), sigma));
    }
    return generators;
}

bool is_hypercube_edge(const Permutation& sigma, const Permutation& sigma_prime) {
    if (sigma.size() != sigma_prime.size())
        throw std::invalid_argument("is_hypercube_edge: size mismatch");
    const InversionVector a = inv_vector(sigma);
    const InversionVector b = inv_vector(sigma_prime);
    int distance = 0;
    for (int j = 0; j < a.size(); ++j) {
        distance += std::abs(a[j] - b[j]);
        if (distance > 1) return false;
    }
    return distance == 1;
}

std::set<Permutation> all_transpositions(int n) {
    std::set<Permutation> out;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) out.insert(transposition_permutation(n, {i, j}));
    return out;
}

StructureReport certify_structure(int n, std::span<const ProcessTrajectory> trajectories) {
    if (n < 1 || n > 6) throw std::invalid_argument("certify_structure: n must be in 1..6");
    StructureReport report;
    report.n = n;
    report.trajectories = trajectories.size();

    for (const auto& traj : trajectories) {
        if (traj.n != n) throw std::invalid_argument("certify_structure: trajectory size mismatch");
        std::vector<int> entries(static_cast<std::size_t>(n), 0);
        std::uint64_t before_id = 0;
        Permutation before = Permutation::identity(n);
        for (const auto& e : traj.events) {
            entries[static_cast<std::size_t>(e.j - 1)] = e.k;
            const InversionVector after_inv(entries);
            const std::uint64_t after_id = lehmer_rank(after_inv);
            Permutation after = phi(after_inv);
            ++report.transitions;

            if (!is_hypercube_edge(before, after)) ++report.edge_violations;
            const auto quotient = transposition_of(before, after);
            if (quotient) {
                report.observed_generators.insert(compose(before.inverse(), after));
                report.observed_generators.insert(compose(after.inverse(), before));
            } else {
                ++report.quotient_violations;
            }

            const auto key = std::minmax(before_id, after_id);
            ++report.edge_counts[{key.first, key.second}];
            before = std::move(after);
            before_id = after_id;
        }
    }

    bool adjacent = true;
    for (int i = 1; i < n; ++i)
        adjacent = adjacent && report.observed_generators.count(
                                   transposition_permutation(n, {i, i + 1})) > 0;
    report.adjacent_covered = n == 1 ? true : adjacent;
    report.edge_coverage =
        static_cast<double>(report.edge_counts.size()) /
        std::max<double>(1.0, static_cast<double>(HypercubeGraph::expected_edge_count(n)));
    return report;
}

} // namespace mallows
