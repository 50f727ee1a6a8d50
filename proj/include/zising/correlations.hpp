#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "zising/region.hpp"

namespace zising {

// Coordinate p (any integer, through the lifts) of the curve
//   gamma_p(t) = prod_{j=1}^{2 floor(p/2)} dn(t - alpha~_j) / sqrt(k')
//              * prod_{j in J~_p} sn(t - alpha~_j),
// which satisfies gamma_{p+2n}(t) = (-1)^{n-1} gamma_p(t).
double gamma_coord(const Region& r, double m, double t, long p);

// Coordinates 1..2n stacked into a vector.
Eigen::VectorXd gamma_curve(const Region& r, double m, double t);

// Equivalent form with unlifted angles and the sign (-1)^{|J_p cap [p]|};
// kept as an independent cross-check of the lifted bookkeeping.
Eigen::VectorXd gamma_sign_form(const Region& r, double m, double t);

// 2n x n pairing matrix: entries (2i-1, i) and (2i, i) equal 1/2.
Eigen::MatrixXd k_matrix(int n);

// Sorted J_1 union {1}; the curve samples at these alpha's form a basis of
// the curve's span whenever all angles are distinct.
std::vector<int> basis_row_indices(const Region& r);

// n x 2n matrix with rows gamma(alpha_j), j in basis_row_indices. Throws
// std::invalid_argument when two basis angles share a direction mod pi (the
// rows become proportional); alternating_basis handles that case.
Eigen::MatrixXd basis_matrix(const Region& r, double m);

struct DoubledResult {
    Eigen::MatrixXd mtilde;  // n x 2n, rows satisfy m~_{i,2i-1} = m~_{i,2i} = 1
    double cond = 0;         // condition number of A K_n
};

// M~ = (A K_n)^{-1} A for any A whose rows span the curve's subspace.
DoubledResult doubled_matrix(const Eigen::MatrixXd& A);

// Correlation entries out of M~: m_{i,i} = 1 and
// m_{i,j} = (-1)^{i+j+[i<j]} m~_{i,2j-1}.
Eigen::MatrixXd extract_correlations(const Eigen::MatrixXd& mtilde);

struct CorrelationResult {
    Eigen::MatrixXd M;       // n x n, symmetric, unit diagonal
    Eigen::MatrixXd mtilde;  // n x 2n
    double cond = 0;
};

// Full pipeline. Uses the sample-row basis when the basis directions are
// distinct mod pi and the derivative (alternating) basis otherwise; the
// doubling identity only depends on the row span, so the result is the same.
CorrelationResult correlation_matrix(const Region& r, double m);

// Transport matrix g_j: identity except a 2x2 block at rows/columns (j, j+1)
// built from s = sn(alpha~_{j+1} - alpha~_j), c = cn(...) -- at the dual
// parameter for odd j, at m itself for even j -- with diagonal 1/c and
// off-diagonal s/c. For j = 2n the block sits at the corner positions
// (1,1),(1,2n),(2n,1),(2n,2n): it is the even block written in lifted
// coordinates (2n, 2n+1) folded back through gamma_{p+2n} = (-1)^{n-1}
// gamma_p, so the off-diagonal entries pick up the sign (-1)^{n-1}.
// Throws std::invalid_argument when tau(j) = j+1 (the block degenerates).
Eigen::MatrixXd transfer_matrix(const Region& r, double m, int j);

// Max over the samples of ||gamma_R(t) - gamma_R'(t) g_j||_inf with
// R' = apply_descent(r, j). Exact (to rounding) for j < 2n at every m and for
// j = 2n at m = 0; at j = 2n, m != 0 only the row span transports.
double descent_transport_check(const Region& r, double m, int j,
                               const std::vector<double>& tSamples);

// order-th t-derivative of the curve, computed analytically by product rule
// over the sn/dn factors (no finite differences).
Eigen::VectorXd gamma_derivative(const Region& r, double m, double t, int order);

// Rows u^(j) = gamma^(m_j)(alpha_j) restricted to supp(j), for j in
// basis_row_indices. Works for every valid region, including those with
// repeated directions where plain curve samples degenerate. Throws if the
// result is rank deficient.
Eigen::MatrixXd alternating_basis(const Region& r, double m);

// Nested divided-difference operator: with anchors (a_1..a_m),
// m! * value -> f^(m)(a) as the anchors collapse to a. Anchors must be
// pairwise distinct.
double discrete_derivative(const std::function<double(double)>& f,
                           const std::vector<double>& anchors, double x);

// Index-shifted region carrying the dual curve: alpha*_l = alpha~_{l-1},
// tau*(l) = tau~(l-1) + 1 reduced to [1, 2n]. The dual curve is the gamma
// curve of this region at the dual parameter.
Region dual_region(const Region& r);

double dual_gamma_coord(const Region& r, double m, double t, long p);
Eigen::VectorXd dual_gamma(const Region& r, double m, double t);

// Cyclic shift: S e_j = e_{j-1} for j >= 2 and S e_1 = (-1)^{n-1} e_{2n}
// (acting on row vectors from the right: (x S)_j = x_{j+1} cyclically).
Eigen::MatrixXd shift_S(int n);

struct DualityResiduals {
    double ratioSpread = 0;        // constancy in p of gamma_p / gamma*_{p+1}
    double projectorDistance = 0;  // span(gamma) S versus span(gamma*)
    double kwResidual = 0;         // per-edge sinh(2 j_e) sinh(2 j*_e) - 1
};

DualityResiduals duality_checks(const Region& r, double m, int tCount, unsigned seed);

// Orthogonal projector onto the row span (rank cut at 1e-10 relative).
Eigen::MatrixXd span_projector(const Eigen::MatrixXd& rows);

}  // namespace zising
