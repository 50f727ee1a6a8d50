#pragma once

namespace zising {

// Jacobi elliptic functions in the rescaled convention used throughout this
// library: pq(t) stands for the classical pq(2 K(m) t / pi | m), so the real
// quarter period sits at t = pi/2 for every parameter m = k^2 < 1 (negative
// values included). At m = 0 the functions reduce to sin, cos and 1.

struct EllipticParameter {
    double m;       // k^2, must satisfy m < 1
    double kprime;  // sqrt(1 - m)
    double mDual;   // -m / (1 - m), the Kramers-Wannier dual parameter
    double scale;   // 2 K(m) / pi, d/dt of the argument rescaling
};

struct JacobiTriple {
    double sn, cn, dn;
};

// K(m) = \int_0^{pi/2} dx / sqrt(1 - m sin^2 x), by AGM iteration.
double complete_K(double m);

double dual_parameter(double m);
double elliptic_scale(double m);
EllipticParameter make_parameter(double m);

JacobiTriple resc_sncndn(double t, double m);
double resc_sn(double t, double m);
double resc_cn(double t, double m);
double resc_dn(double t, double m);
double resc_sd(double t, double m);
double resc_cd(double t, double m);

// t-derivatives of the rescaled functions (chain rule brings in `scale`).
JacobiTriple resc_sncndn_derivs(double t, double m);
double resc_sn_deriv(double t, double m);
double resc_cn_deriv(double t, double m);
double resc_dn_deriv(double t, double m);

inline JacobiTriple resc_sncndn(double t, const EllipticParameter& p) { return resc_sncndn(t, p.m); }
inline double resc_sn(double t, const EllipticParameter& p) { return resc_sn(t, p.m); }
inline double resc_cn(double t, const EllipticParameter& p) { return resc_cn(t, p.m); }
inline double resc_dn(double t, const EllipticParameter& p) { return resc_dn(t, p.m); }
inline double resc_sd(double t, const EllipticParameter& p) { return resc_sd(t, p.m); }
inline double resc_cd(double t, const EllipticParameter& p) { return resc_cd(t, p.m); }

}  // namespace zising
