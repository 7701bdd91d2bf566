#pragma once

#include <cstdint>
#include <random>

namespace blaschke {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Independent stream derived from a root seed. Used to make Monte Carlo
// partitions reproducible regardless of how chunks are assigned to workers.
inline std::mt19937_64 stream_rng(std::uint64_t root_seed, std::uint64_t stream_id) {
    return std::mt19937_64(splitmix64(root_seed ^ splitmix64(stream_id)));
}

} // namespace blaschke
