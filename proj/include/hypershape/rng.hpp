#pragma once

#include <cstdint>
#include <random>

namespace hypershape {

// Pinned in run manifests so outputs can be regenerated from a seed.
inline constexpr const char* kRngAlgorithm =
    "splitmix64-derived subseeds; mt19937_64 core; polar method normals";

// splitmix64 step; also used to mix per-cell subseeds from (seed, tags...).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic subseed for an independent stream identified by up to
// three integer tags (dimension, bin count, replicate index, ...).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t state = seed;
    std::uint64_t out = splitmix64(state);
    state ^= a;
    out ^= splitmix64(state);
    state ^= b;
    out ^= splitmix64(state);
    state ^= c;
    out ^= splitmix64(state);
    return out;
}

// mt19937_64 wrapper with distribution transforms implemented here rather
// than taken from <random>, whose distributions vary across standard
// libraries. Given a seed, the stream is identical on every platform that
// rounds sqrt/log the same way (all mainstream libms in practice).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via the Marsaglia polar method; pairs are cached.
    double normal();

    // Uniform index in [0, m) by 128-bit multiply; bias is O(m / 2^64).
    std::size_t uniform_index(std::size_t m) {
        const unsigned __int128 prod =
            static_cast<unsigned __int128>(engine_()) * static_cast<unsigned __int128>(m);
        return static_cast<std::size_t>(prod >> 64);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace hypershape
