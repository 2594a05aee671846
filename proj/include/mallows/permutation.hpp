#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace mallows {

class InversionVector;

// Permutation of {1..n} in one-line notation. Storage is zero-based;
// one-based views exist only at the serialization boundary.
class Permutation {
public:
    // values[i] = image of i, zero-based; must be a permutation of 0..n-1.
    explicit Permutation(std::vector<int> zero_based);

    static Permutation identity(int n);
    // entries are 1..n, each exactly once
    static Permutation from_one_line(const std::vector<int>& one_based);

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }
    std::vector<int> to_one_line() const;

    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;

private:
    struct unchecked_tag {};
    Permutation(std::vector<int> v, unchecked_tag) : values_(std::move(v)) {}

    std::vector<int> values_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend class InversionVector;
    friend Permutation phi(const InversionVector&);
    friend Permutation phi_reference(const InversionVector&);
};

// Element of the inversion-vector lattice: entries()[j-1] = I_j with
// 0 <= I_j <= j-1 (so the first entry is always 0).
class InversionVector {
public:
    explicit InversionVector(std::vector<int> entries);

    static InversionVector zero(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int idx) const { return entries_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& entries() const { return entries_; }

    std::int64_t total() const;

    auto operator<=>(const InversionVector&) const = default;

private:
    struct unchecked_tag {};
    InversionVector(std::vector<int> v, unchecked_tag) : entries_(std::move(v)) {}

    std::vector<int> entries_;

    friend InversionVector inv_vector(const Permutation&);
};

// The transposition <i j> with 1 <= i < j <= n, in the one-based
// convention used by all external formats.
struct Transposition {
    int i;
    int j;
    auto operator<=>(const Transposition&) const = default;
};

std::int64_t inv_count(const Permutation& sigma);
InversionVector inv_vector(const Permutation& sigma);

// Unique permutation whose inversion vector equals inv. O(n log n) via an
// order-statistics tree.
Permutation phi(const InversionVector& inv);
// Naive O(n^2) construction kept as an independent cross-check of phi.
Permutation phi_reference(const InversionVector& inv);
InversionVector phi_inv(const Permutation& sigma);

// (sigma . tau)(i) = sigma(tau(i))
Permutation compose(const Permutation& sigma, const Permutation& tau);

// If sigma^-1 . sigma' is a transposition, returns it; absent otherwise.
std::optional<Transposition> transposition_of(const Permutation& sigma,
                                              const Permutation& sigma_prime);

// Permutation form of <i j> acting on {1..n}.
Permutation transposition_permutation(int n, Transposition t);

// Mixed-radix rank of an inversion vector: sum_j I_j * (j-1)!, a dense id
// in [0, n!). Requires n <= 20.
std::uint64_t lehmer_rank(const InversionVector& inv);
InversionVector lehmer_unrank(int n, std::uint64_t rank);

} // namespace mallows
