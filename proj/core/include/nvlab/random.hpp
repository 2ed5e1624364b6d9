#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nvlab {

// Counter-based seed derivation: every random stream in an experiment is
// keyed by (master seed, trial index, stream tag), so trials are
// reproducible and independent of execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial,
                                 std::uint64_t stream) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (trial + 0x510e527fade682d1ULL));
    s = splitmix64(s ^ (stream + 0x9b05688c2b3e6c1fULL));
    return s;
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t trial,
                                std::uint64_t stream) {
    return std::mt19937_64(derive_seed(seed, trial, stream));
}

// FNV-1a, used to map policy names onto disjoint stream tags.
inline std::uint64_t stream_tag(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline constexpr std::uint64_t kDemandStream = 0;
inline constexpr std::uint64_t kThetaStarStream = 1;

inline double uniform01(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace nvlab
