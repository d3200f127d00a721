// Randomness plumbing: a single generator type for the whole library plus a
// stable way to derive independent sub-seeds from one root seed.
#pragma once

#include <cstdint>
#include <random>

namespace iqc {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// i-th output of a SplitMix64 stream seeded with `root`.
//
// Used to hand every Monte-Carlo trial its own seed: trial i of a sweep runs
// on derive_seed(root, i) no matter which grid point it belongs to, so two
// sweeps with the same root seed see identical randomness per trial index
// (common random numbers), and the whole run is reproducible from one number.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t z = root + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace iqc
