#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "zising/region.hpp"
#include "zising/rng.hpp"

namespace ztest {

constexpr double kPi = 3.14159265358979323846;

inline zising::Region square() {
    return {{{3, 4, 1, 2}}, {0.0, kPi / 4, kPi / 2, 3 * kPi / 4}};
}

// n = 2 region with an off-center crossing angle th.
inline zising::Region asym_square(double th) {
    return {{{3, 4, 1, 2}}, {0.0, th, kPi / 2, th + kPi / 2}};
}

// Valid alternating region: two directions, each hit twice mod pi.
inline zising::Region alternating_region(double beta) {
    return {{{3, 4, 1, 2, 7, 8, 5, 6}},
            {0.0, beta, kPi / 2, beta + kPi / 2, kPi, beta + kPi, 3 * kPi / 2,
             beta + 3 * kPi / 2}};
}

inline zising::Region random_region(std::mt19937& rng, int nLo, int nHi) {
    int n = zising::uniform_int(rng, nLo, nHi);
    return zising::canonical_shape(zising::random_involution(2 * n, rng));
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace ztest
