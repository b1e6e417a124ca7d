#pragma once

#include <cstdint>

namespace hz {

/// splitmix64 step: advances the state and returns the next scrambled word.
/// Used to expand a 64-bit seed into larger state and to derive sub-streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** with 256-bit state seeded from a 64-bit seed via splitmix64.
/// Stream-split rule (documented so any implementation reproduces the same
/// corpora): the child stream with index k is the engine constructed from
/// seed' = splitmix64 applied once to (seed XOR (k+1) * 0x9E3779B97F4A7C15).
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1): top 53 bits of the next word.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), by rejection-free 128-bit multiply
    /// (Lemire); bias < 2^-64, irrelevant at corpus sizes used here.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Independent child stream number k (see the stream-split rule above).
    Xoshiro256StarStar split(std::uint64_t k) const {
        std::uint64_t mixed = seed_ ^ ((k + 1) * 0x9E3779B97F4A7C15ULL);
        return Xoshiro256StarStar(splitmix64(mixed));
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t seed_;
    std::uint64_t s_[4];
};

}  // namespace hz
