#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mallows/permutation.hpp"
#include "mallows/rng.hpp"

namespace mallows {

struct MallowsParams {
    int n;
    double q; // non-negative; doubles as the time parameter of a process
};

// Z_{n,q} = prod_{k=1}^n sum_{l=0}^{k-1} q^l. Throws std::overflow_error when
// the product leaves the double range; use log_normalizing_constant then.
double normalizing_constant(MallowsParams params);
double log_normalizing_constant(MallowsParams params);

// q^{Inv(sigma)} / Z_{n,q}, with the 0^0 = 1 convention so q = 0 is the
// point mass at the identity.
double pmf(const Permutation& sigma, MallowsParams params);

// Inverse-CDF sample of the level distribution P(K = k) = q^k / sum q^l on
// {0..j-1} from a single uniform u in (0,1).
int truncated_geometric(int j, double q, double u);

InversionVector sample_inversions(MallowsParams params, rng::Stream& stream);
Permutation sample(MallowsParams params, rng::Stream& stream);

// counts[l] = number of permutations of n with exactly l inversions.
// Entries are exact; they fit in 64 bits through n = 20 and in the wide
// representation through n = 34.
struct InversionCountTable {
    int n;
    std::vector<unsigned __int128> counts;

    std::uint64_t at_u64(std::size_t ell) const; // throws if the entry needs > 64 bits
};

InversionCountTable inversion_count_table(int n);

// Exact survival function P(T_k > t) = (sum_{l<k} counts[l] t^l) / Z_{n,t}
// of the k-th jumping time of any monotone process with these marginals.
double exact_jump_time_sf(int n, std::int64_t k, double t);

// Full enumeration of S_n with pmf values; guarded to n <= 8. Also
// cross-checks the coordinate product form against the pmf for every
// permutation and throws std::logic_error on disagreement.
std::map<Permutation, double> enumerate_oracle(int n, double q);

} // namespace mallows
