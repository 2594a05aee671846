#include "mallows/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mallows/numeric.hpp"

namespace mallows {

namespace {

void check_params(MallowsParams params) {
    if (params.n <= 0) throw std::invalid_argument("MallowsParams: n must be positive");
    if (!(params.q >= 0.0)) throw std::domain_error("MallowsParams: q must be non-negative");
}

constexpr double kUniformSwitch = 1e-9; // |q-1| below this uses the uniform branch

} // namespace

double normalizing_constant(MallowsParams params) {
    check_params(params);
    double z = 1.0;
    for (int k = 1; k <= params.n; ++k) {
        z *= numeric::geometric_sum(k, params.q);
        if (!std::isfinite(z))
            throw std::overflow_error("normalizing_constant: product exceeds double range");
    }
    return z;
}

double log_normalizing_constant(MallowsParams params) {
    check_params(params);
    double acc = 0.0;
    for (int k = 1; k <= params.n; ++k) acc += numeric::log_geometric_sum(k, params.q);
    return acc;
}

double pmf(const Permutation& sigma, MallowsParams params) {
    check_params(params);
    if (sigma.size() != params.n) throw std::invalid_argument("pmf: size mismatch");
    const std::int64_t inv = inv_count(sigma);
    if (params.q == 0.0) return inv == 0 ? 1.0 : 0.0;
    const double log_p = static_cast<double>(inv) * std::log(params.q) -
                         log_normalizing_constant(params);
    return std::exp(log_p);
}

int truncated_geometric(int j, double q, double u) {
    if (j <= 0) throw std::invalid_argument("truncated_geometric: j must be positive");
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("truncated_geometric: u must lie in (0,1)");
    if (q < 0.0) throw std::domain_error("truncated_geometric: q must be non-negative");
    if (j == 1 || q == 0.0) return 0;
    if (std::abs(q - 1.0) < kUniformSwitch) {
        return std::min(static_cast<int>(u * j), j - 1);
    }
    // smallest k with u <= (1 - q^{k+1}) / (1 - q^j)
    const double lq = std::log(q);
    double level;
    if (j * lq > 700.0) {
        // q^j overflows; log(1 + u(q^j - 1)) ~ log u + j log q
        level = static_cast<double>(j) + std::log(u) / lq;
    } else {
        level = std::log1p(u * std::expm1(j * lq)) / lq;
    }
    const int k = static_cast<int>(std::floor(std::clamp(level, 0.0, static_cast<double>(j))));
    return std::clamp(k, 0, j - 1);
}

InversionVector sample_inversions(MallowsParams params, rng::Stream& stream) {
    check_params(params);
    std::vector<int> entries(static_cast<std::size_t>(params.n));
    for (int j = 1; j <= params.n; ++j) {
        entries[static_cast<std::size_t>(j - 1)] =
            j == 1 ? 0 : truncated_geometric(j, params.q, stream.uniform01());
    }
    return InversionVector(std::move(entries));
}

Permutation sample(MallowsParams params, rng::Stream& stream) {
    return phi(sample_inversions(params, stream));
}

std::uint64_t InversionCountTable::at_u64(std::size_t ell) const {
    const unsigned __int128 v = counts.at(ell);
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("InversionCountTable: entry exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

InversionCountTable inversion_count_table(int n) {
    if (n < 1) throw std::invalid_argument("inversion_count_table: n must be >= 1");
    if (n > 34) throw std::invalid_argument("inversion_count_table: n must be <= 34");
    // iterated bounded-part convolution: multiply by (1 + t + ... + t^{j-1})
    std::vector<unsigned __int128> counts{1};
    for (int j = 2; j <= n; ++j) {
        const std::size_t old_size = counts.size();
        std::vector<unsigned __int128> next(old_size + static_cast<std::size_t>(j) - 1, 0);
        // prefix sums turn the window convolution into two lookups
        std::vector<unsigned __int128> prefix(old_size + 1, 0);
        for (std::size_t i = 0; i < old_size; ++i) prefix[i + 1] = prefix[i] + counts[i];
        for (std::size_t ell = 0; ell < next.size(); ++ell) {
            const std::size_t hi = std::min(ell + 1, old_size);
            const std::size_t lo = ell + 1 > static_cast<std::size_t>(j)
                                       ? ell + 1 - static_cast<std::size_t>(j)
                                       : 0;
            next[ell] = prefix[hi] - prefix[lo];
        }
        counts = std::move(next);
    }
    return InversionCountTable{n, std::move(counts)};
}

double exact_jump_time_sf(int n, std::int64_t k, double t) {
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (k < 1 || k > pairs)
        throw std::invalid_argument("exact_jump_time_sf: k must lie in [1, n(n-1)/2]");
    if (!(t >= 0.0)) throw std::domain_error("exact_jump_time_sf: t must be non-negative");
    if (t == 0.0) return 1.0;
    const InversionCountTable table = inversion_count_table(n);
    const double log_z = log_normalizing_constant({n, t});
    const double lt = std::log(t);
    // log-sum-exp over the k leading table terms
    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<double> logs(static_cast<std::size_t>(k));
    for (std::int64_t ell = 0; ell < k; ++ell) {
        const double lg =
            std::log(static_cast<double>(table.counts[static_cast<std::size_t>(ell)])) +
            static_cast<double>(ell) * lt;
        logs[static_cast<std::size_t>(ell)] = lg;
        max_log = std::max(max_log, lg);
    }
    double acc = 0.0;
    for (double lg : logs) acc += std::exp(lg - max_log);
    const double sf = std::exp(max_log + std::log(acc) - log_z);
    return std::min(sf, 1.0);
}

std::map<Permutation, double> enumerate_oracle(int n, double q) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_oracle: n must be in 1..8");
    if (q < 0.0) throw std::domain_error("enumerate_oracle: q must be non-negative");
    std::map<Permutation, double> out;
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i;
    const MallowsParams params{n, q};
    do {
        const Permutation sigma(values);
        const double p = pmf(sigma, params);
        // coordinate product form must agree with the pmf
        double product = 1.0;
        const InversionVector inv = inv_vector(sigma);
        for (int j = 1; j <= n; ++j) {
            const double denom = numeric::geometric_sum(j, q);
            const double numer = inv[j - 1] == 0 ? 1.0 : std::pow(q, inv[j - 1]);
            product *= numer / denom;
        }
        if (std::abs(product - p) > 1e-12 * std::max(1.0, p))
            throw std::logic_error("enumerate_oracle: product form disagrees with pmf");
        out.emplace(sigma, p);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

} // namespace mallows
