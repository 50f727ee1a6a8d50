#pragma once

#include <cstdint>
#include <random>

namespace zising {

// Uniform draws built from raw mt19937 output so that sequences are identical
// across standard libraries (std::uniform_real_distribution is not portable).

inline double uniform01(std::mt19937& rng) {
    std::uint64_t hi = rng() >> 5;  // 27 bits
    std::uint64_t lo = rng() >> 6;  // 26 bits
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
}

inline double uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline int uniform_int(std::mt19937& rng, int lo, int hi) {
    int span = hi - lo + 1;
    int v = lo + static_cast<int>(uniform01(rng) * span);
    return v > hi ? hi : v;
}

}  // namespace zising
