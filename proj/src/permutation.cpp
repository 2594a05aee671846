#include "mallows/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mallows {

namespace {

// Fenwick tree over 0..n-1 supporting prefix sums and k-th order statistic.
class FenwickTree {
public:
    explicit FenwickTree(int n) : n_(n), tree_(static_cast<std::size_t>(n) + 1, 0) {}

    static FenwickTree all_ones(int n) {
        FenwickTree f(n);
        for (int i = 1; i <= n; ++i) {
            f.tree_[static_cast<std::size_t>(i)] += 1;
            const int parent = i + (i & -i);
            if (parent <= n) f.tree_[static_cast<std::size_t>(parent)] += f.tree_[static_cast<std::size_t>(i)];
        }
        return f;
    }

    void add(int idx, int delta) {
        for (int i = idx + 1; i <= n_; i += i & -i) tree_[static_cast<std::size_t>(i)] += delta;
    }

    // count of entries with index <= idx
    int prefix(int idx) const {
        int sum = 0;
        for (int i = idx + 1; i > 0; i -= i & -i) sum += tree_[static_cast<std::size_t>(i)];
        return sum;
    }

    // zero-based index of the k-th present element, k >= 1
    int select(int k) const {
        int pos = 0, remaining = k;
        int mask = 1;
        while ((mask << 1) <= n_) mask <<= 1;
        for (; mask > 0; mask >>= 1) {
            const int next = pos + mask;
            if (next <= n_ && tree_[static_cast<std::size_t>(next)] < remaining) {
                pos = next;
                remaining -= tree_[static_cast<std::size_t>(pos)];
            }
        }
        return pos; // tree is 1-based internally; pos is the 0-based element
    }

private:
    int n_;
    std::vector<int> tree_;
};

} // namespace

Permutation::Permutation(std::vector<int> zero_based) : values_(std::move(zero_based)) {
    const int n = size();
    if (n == 0) throw std::invalid_argument("Permutation: size must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : values_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: values must be a permutation of 0..n-1");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n <= 0) throw std::invalid_argument("Permutation: size must be positive");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(v), unchecked_tag{});
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
    std::vector<int> v(one_based.size());
    for (std::size_t i = 0; i < one_based.size(); ++i) v[i] = one_based[i] - 1;
    return Permutation(std::move(v));
}

std::vector<int> Permutation::to_one_line() const {
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] + 1;
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(values_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv), unchecked_tag{});
}

InversionVector::InversionVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("InversionVector: size must be positive");
    for (int j = 1; j <= size(); ++j) {
        const int e = entries_[static_cast<std::size_t>(j - 1)];
        if (e < 0 || e > j - 1)
            throw std::invalid_argument("InversionVector: entry out of [0, j-1]");
    }
}

InversionVector InversionVector::zero(int n) {
    if (n <= 0) throw std::invalid_argument("InversionVector: size must be positive");
    return InversionVector(std::vector<int>(static_cast<std::size_t>(n), 0), unchecked_tag{});
}

std::int64_t InversionVector::total() const {
    std::int64_t sum = 0;
    for (int e : entries_) sum += e;
    return sum;
}

std::int64_t inv_count(const Permutation& sigma) {
    const int n = sigma.size();
    FenwickTree seen(n);
    std::int64_t count = 0;
    for (int pos = 0; pos < n; ++pos) {
        const int v = sigma[pos];
        // earlier values strictly greater than v
        count += pos - seen.prefix(v);
        seen.add(v, 1);
    }
    return count;
}

InversionVector inv_vector(const Permutation& sigma) {
    const int n = sigma.size();
    FenwickTree seen(n);
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        const int v = sigma[pos];
        entries[static_cast<std::size_t>(pos)] = pos - seen.prefix(v);
        seen.add(v, 1);
    }
    return InversionVector(std::move(entries), InversionVector::unchecked_tag{});
}

Permutation phi(const InversionVector& inv) {
    const int n = inv.size();
    FenwickTree unplaced = FenwickTree::all_ones(n);
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int j = n; j >= 1; --j) {
        // x_1 < ... < x_j are the values not yet placed; take x_{j - I_j}
        const int rank = j - inv[j - 1];
        const int value = unplaced.select(rank);
        values[static_cast<std::size_t>(j - 1)] = value;
        unplaced.add(value, -1);
    }
    return Permutation(std::move(values), Permutation::unchecked_tag{});
}

Permutation phi_reference(const InversionVector& inv) {
    const int n = inv.size();
    std::vector<int> unplaced(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) unplaced[static_cast<std::size_t>(i)] = i;
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int j = n; j >= 1; --j) {
        const int idx = j - inv[j - 1] - 1; // zero-based position of x_{j - I_j}
        values[static_cast<std::size_t>(j - 1)] = unplaced[static_cast<std::size_t>(idx)];
        unplaced.erase(unplaced.begin() + idx);
    }
    return Permutation(std::move(values), Permutation::unchecked_tag{});
}

InversionVector phi_inv(const Permutation& sigma) { return inv_vector(sigma); }

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> v(static_cast<std::size_t>(sigma.size()));
    for (int i = 0; i < sigma.size(); ++i) v[static_cast<std::size_t>(i)] = sigma[tau[i]];
    return Permutation(std::move(v), Permutation::unchecked_tag{});
}

std::optional<Transposition> transposition_of(const Permutation& sigma,
                                              const Permutation& sigma_prime) {
    if (sigma.size() != sigma_prime.size())
        throw std::invalid_argument("transposition_of: size mismatch");
    const Permutation quotient = compose(sigma.inverse(), sigma_prime);
    int first = -1, second = -1;
    for (int i = 0; i < quotient.size(); ++i) {
        if (quotient[i] == i) continue;
        if (first < 0) {
            first = i;
        } else if (second < 0) {
            second = i;
        } else {
            return std::nullopt; // more than two displaced points
        }
    }
    if (first < 0 || second < 0) return std::nullopt; // identity or a single move
    if (quotient[first] != second || quotient[second] != first) return std::nullopt;
    return Transposition{first + 1, second + 1};
}

Permutation transposition_permutation(int n, Transposition t) {
    if (!(1 <= t.i && t.i < t.j && t.j <= n))
        throw std::invalid_argument("transposition_permutation: need 1 <= i < j <= n");
    Permutation p = Permutation::identity(n);
    std::vector<int> v = p.values();
    std::swap(v[static_cast<std::size_t>(t.i - 1)], v[static_cast<std::size_t>(t.j - 1)]);
    return Permutation(std::move(v));
}

std::uint64_t lehmer_rank(const InversionVector& inv) {
    const int n = inv.size();
    if (n > 20) throw std::invalid_argument("lehmer_rank: n must be <= 20");
    std::uint64_t rank = 0, weight = 1;
    for (int j = 1; j <= n; ++j) {
        rank += static_cast<std::uint64_t>(inv[j - 1]) * weight;
        weight *= static_cast<std::uint64_t>(j);
    }
    return rank;
}

InversionVector lehmer_unrank(int n, std::uint64_t rank) {
    if (n <= 0 || n > 20) throw std::invalid_argument("lehmer_unrank: n must be in 1..20");
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        entries[static_cast<std::size_t>(j - 1)] = static_cast<int>(rank % static_cast<std::uint64_t>(j));
        rank /= static_cast<std::uint64_t>(j);
    }
    if (rank != 0) throw std::invalid_argument("lehmer_unrank: rank out of range");
    return InversionVector(std::move(entries));
}

} // namespace mallows
