#pragma once

#include <Eigen/Dense>

#include "zising/region.hpp"

namespace zising {

// Leading terms of the curve in the elliptic parameter m at fixed t:
// gamma(t, m) = zeroth + m * secondOrder + O(m^2).
struct ExpansionSample {
    double t = 0;
    Eigen::VectorXd zeroth;       // gamma(r, 0, t)
    Eigen::VectorXd secondOrder;  // (1/4) prod_{J~_p} sin(t - a~) *
                                  //   [sum_{J~_p} cos^2(t - a~) + sum_j cos(2(t - a_j))]
};

ExpansionSample gamma_expansion(const Region& r, double t);

// n x 2n matrix with F_{l,p} = sum over subsets H of J~_p with |H| = l-1 of
// prod_{H} sin(a~) * prod_{J~_p \ H} cos(a~). Together with the trigonometric
// Vandermonde V_{i,l} = (-cos t_i)^{l-1} (sin t_i)^{n-l} it reconstructs the
// m = 0 curve samples: V F = Gamma(0). Throws on repeated angles.
Eigen::MatrixXd critical_F_matrix(const Region& r);

struct FactorizationResiduals {
    double realReconstruction = 0;   // max |V F - Gamma(0)|
    double phaseFactorization = 0;   // max |Fc_{l,p} - D_l z_l^{p-1}|, z_l = e^{i pi (2l-n-1)/(2n)}
    double complexReconstruction = 0;  // max |Re(Vc Fc) - Gamma(0)|
    double imaginaryPart = 0;          // max |Im(Vc Fc)|
};

// Evaluates both reconstruction identities at the basis angles plus the
// rank-one phase factorization of the complex variant
// Fc_{l,p} = (2i)^{1-n} (-1)^{l-1} sum_H e^{i(sum_H a~ - sum_{not H} a~)}.
// The phase factorization holds for equally spaced directions only; for
// other regions its residual is simply reported. Throws on repeated angles.
FactorizationResiduals critical_factorization_checks(const Region& r);

}  // namespace zising
