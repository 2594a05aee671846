#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace mallows::rng {

// SplitMix64 finalizer; used for seeding and for key mixing.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ value-type stream. Copyable on purpose: tests snapshot
// a stream to replay the exact draws an algorithm will consume.
class Stream {
public:
    explicit Stream(std::uint64_t seed) {
        for (auto& w : state_) w = splitmix64(seed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Strictly inside (0,1): (k + 1/2) * 2^-53 with k in [0, 2^53).
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exponential(1) by inversion.
    double exponential() { return -std::log(uniform01()); }

    // Unbiased integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

// Counter-based stream derivation. Each (replication, coordinate, attempt)
// tuple maps to an independent stream of the master seed, so results do not
// depend on thread scheduling.
inline Stream substream(std::uint64_t master, std::uint64_t replication,
                        std::uint64_t coordinate = 0, std::uint64_t attempt = 0) {
    std::uint64_t x = master;
    std::uint64_t h = splitmix64(x);
    x ^= replication * 0xd1342543de82ef95ULL;
    h ^= splitmix64(x);
    x ^= coordinate * 0xaf251af3b0f025b5ULL;
    h ^= splitmix64(x);
    x ^= attempt * 0x9e6c63d0876a9a47ULL;
    h ^= splitmix64(x);
    return Stream(h);
}

// Per-replication family of coordinate streams.
struct StreamFamily {
    std::uint64_t master = 0;
    std::uint64_t replication = 0;

    Stream coordinate(std::uint64_t j, std::uint64_t attempt = 0) const {
        return substream(master, replication, j, attempt);
    }
};

} // namespace mallows::rng
