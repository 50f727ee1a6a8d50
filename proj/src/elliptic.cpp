#include "zising/elliptic.hpp"

#include <cmath>
#include <stdexcept>

namespace zising {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_parameter(double m) {
    if (!(m < 1.0)) throw std::domain_error("elliptic parameter must satisfy m < 1");
}

// Classical sn, cn, dn(u | m) for m in [0, 1) by descending Landen recursion.
// Each step shrinks the parameter roughly like m^2/16, so the depth is tiny
// even at m = 0.99; the base case uses the first-order trigonometric form.
JacobiTriple classical_sncndn(double u, double m) {
    if (m < 1e-14) {
        double s = std::sin(u), c = std::cos(u);
        return {s, c, 1.0 - 0.5 * m * s * s};
    }
    double kp = std::sqrt(1.0 - m);
    double k1 = (1.0 - kp) / (1.0 + kp);
    JacobiTriple r = classical_sncndn(u / (1.0 + k1), k1 * k1);
    double den = 1.0 + k1 * r.sn * r.sn;
    return {(1.0 + k1) * r.sn / den, r.cn * r.dn / den, (1.0 - k1 * r.sn * r.sn) / den};
}

JacobiTriple resc_nonnegative(double t, double m) {
    return classical_sncndn(elliptic_scale(m) * t, m);
}

}  // namespace

double complete_K(double m) {
    require_parameter(m);
    double a = 1.0, b = std::sqrt(1.0 - m);
    // The iterates can oscillate in the last ulp, so converge to a relative
    // threshold with a hard cap instead of demanding exact equality.
    for (int i = 0; i < 40; ++i) {
        if (std::abs(a - b) <= 4e-16 * a) break;
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (a + b);
}

double dual_parameter(double m) {
    require_parameter(m);
    return -m / (1.0 - m);
}

double elliptic_scale(double m) { return 2.0 * complete_K(m) / kPi; }

EllipticParameter make_parameter(double m) {
    require_parameter(m);
    return {m, std::sqrt(1.0 - m), dual_parameter(m), elliptic_scale(m)};
}

JacobiTriple resc_sncndn(double t, double m) {
    require_parameter(m);
    if (!std::isfinite(t)) throw std::domain_error("elliptic argument must be finite");
    // All three rescaled functions are 2pi-periodic; reducing first keeps the
    // Landen argument small so accuracy is uniform over |t| <= 4pi and beyond.
    t = std::remainder(t, 2.0 * kPi);
    if (m < 0.0) {
        // Negative parameters are reached exclusively through the duality
        // identities: with m+ = -m/(1-m) in (0,1) and the same argument,
        //   sn_m = k'_+ sd_{m+},  cn_m = cd_{m+},  dn_m = 1/dn_{m+}.
        double mplus = -m / (1.0 - m);
        double kpp = std::sqrt(1.0 - mplus);
        JacobiTriple r = resc_nonnegative(t, mplus);
        return {kpp * r.sn / r.dn, r.cn / r.dn, 1.0 / r.dn};
    }
    return resc_nonnegative(t, m);
}

double resc_sn(double t, double m) { return resc_sncndn(t, m).sn; }
double resc_cn(double t, double m) { return resc_sncndn(t, m).cn; }
double resc_dn(double t, double m) { return resc_sncndn(t, m).dn; }

double resc_sd(double t, double m) {
    JacobiTriple r = resc_sncndn(t, m);
    return r.sn / r.dn;
}

double resc_cd(double t, double m) {
    JacobiTriple r = resc_sncndn(t, m);
    return r.cn / r.dn;
}

JacobiTriple resc_sncndn_derivs(double t, double m) {
    JacobiTriple r = resc_sncndn(t, m);
    double sc = elliptic_scale(m);
    return {sc * r.cn * r.dn, -sc * r.sn * r.dn, -sc * m * r.sn * r.cn};
}

double resc_sn_deriv(double t, double m) { return resc_sncndn_derivs(t, m).sn; }
double resc_cn_deriv(double t, double m) { return resc_sncndn_derivs(t, m).cn; }
double resc_dn_deriv(double t, double m) { return resc_sncndn_derivs(t, m).dn; }

}  // namespace zising
