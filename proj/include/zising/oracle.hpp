#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zising/arrangement.hpp"
#include "zising/region.hpp"

namespace zising {

struct OracleResult {
    double logZ = 0;
    Eigen::MatrixXd correlations;  // n x n over the boundary labels
};

// Exact Ising sums over all spin configurations of the graph (one spin gauge
// fixed to +1; correlations are unaffected, logZ restores the factor 2).
// Enumeration is Gray-coded with incremental energy updates and a fixed
// summation order, accumulated in log domain around the maximal energy.
// Throws std::invalid_argument beyond 24 vertices.
OracleResult exact_correlations(const IsingGraph& g);

// Boundary correlation matrix of the region via arrangement + enumeration.
Eigen::MatrixXd oracle_correlation_matrix(const Region& r, double m, int seed = 0);

// Max infinity-norm discrepancy between the oracle matrices across jitter
// seeds (all pairs).
double z_invariance_check(const Region& r, double m, const std::vector<int>& seeds);

// ||M_formula - M_oracle||_inf for the region at parameter m.
double formula_vs_oracle(const Region& r, double m, int seed = 0);

}  // namespace zising
