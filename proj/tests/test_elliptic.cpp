#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "zising/elliptic.hpp"
#include "zising/rng.hpp"

using namespace zising;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent reference for m in [0, 1): classical Jacobi functions at the
// rescaled argument. Boost parametrizes by the modulus k = sqrt(m).
JacobiTriple boost_resc(double t, double m) {
    double u = elliptic_scale(m) * t;
    JacobiTriple r{};
    r.sn = boost::math::jacobi_elliptic(std::sqrt(m), u, &r.cn, &r.dn);
    return r;
}

double simpson_K(double m, int panels) {
    double h = kPi / 2 / panels, acc = 0;
    for (int i = 0; i <= 2 * panels; ++i) {
        double x = i * h / 2;
        double s = std::sin(x);
        double f = 1.0 / std::sqrt(1.0 - m * s * s);
        double w = (i == 0 || i == 2 * panels) ? 1 : (i % 2 ? 4 : 2);
        acc += w * f;
    }
    return acc * h / 6;
}

}  // namespace

TEST_CASE("complete K against closed values, quadrature and ellint_1") {
    CHECK(std::abs(complete_K(0.0) - kPi / 2) < 1e-15);
    CHECK(std::abs(complete_K(0.5) - simpson_K(0.5, 16384)) < 1e-12);
    for (double m : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99}) {
        double ref = boost::math::ellint_1(std::sqrt(m));
        CHECK(std::abs(complete_K(m) - ref) / ref < 1e-13);
    }
    // negative m via the imaginary-modulus transform K(m) = K(m/(m-1)) / sqrt(1-m)
    for (double m : {-25.0, -5.0, -1.0, -0.3}) {
        double ref = boost::math::ellint_1(std::sqrt(m / (m - 1))) / std::sqrt(1 - m);
        CHECK(std::abs(complete_K(m) - ref) / ref < 1e-13);
    }
}

TEST_CASE("complete K small-m expansion") {
    double m = 1e-4;
    double k = complete_K(m);
    // the first-order truncation pi/2 + pi m/8 is off by the m^2 term
    CHECK(std::abs(k - (kPi / 2 + kPi * m / 8)) < 3e-9);
    // ... which is exactly (9 pi / 128) m^2 at this order
    CHECK(std::abs(k - kPi / 2 * (1 + m / 4 + 9 * m * m / 64)) < 1e-12);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(complete_K(1.0), std::domain_error);
    CHECK_THROWS_AS(complete_K(1.5), std::domain_error);
    CHECK_THROWS_AS(resc_sncndn(0.3, 1.0), std::domain_error);
    CHECK_THROWS_AS(resc_sncndn(std::numeric_limits<double>::quiet_NaN(), 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(resc_sncndn(std::numeric_limits<double>::infinity(), 0.5),
                    std::domain_error);
    CHECK_NOTHROW(complete_K(0.99));
    CHECK_NOTHROW(complete_K(-1e6));
}

TEST_CASE("rescaled functions against the classical reference, m in [0, 0.99)") {
    std::mt19937 rng(1);
    double worst = 0;
    for (int i = 0; i < 400; ++i) {
        double m = uniform(rng, 0.0, 0.99);
        double t = uniform(rng, -4 * kPi, 4 * kPi);
        JacobiTriple a = resc_sncndn(t, m);
        JacobiTriple b = boost_resc(t, m);
        worst = std::max({worst, std::abs(a.sn - b.sn), std::abs(a.cn - b.cn),
                          std::abs(a.dn - b.dn)});
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("negative m against the classical reference through the dual identities") {
    // sn_m = k'_+ sn_+ / dn_+, cn_m = cn_+ / dn_+, dn_m = 1 / dn_+ with the
    // plus-side values taken at m_+ = -m/(1-m) in (0,1) from the reference.
    std::mt19937 rng(2);
    double worst = 0;
    for (int i = 0; i < 400; ++i) {
        double m = uniform(rng, -25.0, -1e-3);
        double t = uniform(rng, -4 * kPi, 4 * kPi);
        double mp = -m / (1.0 - m);
        JacobiTriple p = boost_resc(t, mp);
        double kpp = std::sqrt(1.0 - mp);
        JacobiTriple a = resc_sncndn(t, m);
        worst = std::max({worst, std::abs(a.sn - kpp * p.sn / p.dn),
                          std::abs(a.cn - p.cn / p.dn), std::abs(a.dn - 1.0 / p.dn)});
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("special values at the quarter and half periods") {
    double worst = 0;
    for (double m : {-2.0, -0.5, 0.0, 0.5, 0.9}) {
        double kp = std::sqrt(1 - m);
        worst = std::max({worst,
                          std::abs(resc_sn(kPi / 4, m) - 1 / std::sqrt(1 + kp)),
                          std::abs(resc_cn(kPi / 4, m) - std::sqrt(kp) / std::sqrt(1 + kp)),
                          std::abs(resc_dn(kPi / 4, m) - std::sqrt(kp)),
                          std::abs(resc_sn(kPi / 2, m) - 1.0),
                          std::abs(resc_cn(kPi / 2, m)),
                          std::abs(resc_dn(kPi / 2, m) - kp),
                          std::abs(resc_sn(0.0, m)),
                          std::abs(resc_cn(0.0, m) - 1.0),
                          std::abs(resc_dn(0.0, m) - 1.0)});
    }
    CHECK(worst < 1e-12);
    // dn(pi/4) is sqrt(k'), clearly distinct from 1/sqrt(k')
    double kp = std::sqrt(0.5);
    CHECK(std::abs(resc_dn(kPi / 4, 0.5) - 1 / std::sqrt(kp)) > 1e-2);
}

TEST_CASE("m = 0 reduces to sin, cos, 1") {
    for (int i = -64; i <= 64; ++i) {
        double t = 4 * kPi * i / 64.0;
        JacobiTriple r = resc_sncndn(t, 0.0);
        CHECK(std::abs(r.sn - std::sin(t)) < 1e-14);
        CHECK(std::abs(r.cn - std::cos(t)) < 1e-14);
        CHECK(std::abs(r.dn - 1.0) < 1e-14);
    }
}

TEST_CASE("identity suite over the full parameter envelope") {
    std::mt19937 rng(3);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        double m = uniform(rng, -25.0, 0.99);
        double t = uniform(rng, -4 * kPi, 4 * kPi);
        double u = uniform(rng, -2 * kPi, 2 * kPi);
        double kp = std::sqrt(1 - m);
        JacobiTriple r = resc_sncndn(t, m);
        worst = std::max({worst,
                          std::abs(r.sn * r.sn + r.cn * r.cn - 1),
                          std::abs(r.dn * r.dn - (1 - m * r.sn * r.sn)),
                          std::abs(resc_sn(t + kPi / 2, m) - resc_cd(t, m)),
                          std::abs(resc_cn(t + kPi / 2, m) + kp * resc_sd(t, m)),
                          std::abs(resc_dn(t + kPi / 2, m) - kp / r.dn),
                          std::abs(resc_sn(t + kPi, m) + r.sn),
                          std::abs(resc_cn(t + kPi, m) + r.cn),
                          std::abs(resc_dn(t + kPi, m) - r.dn)});
        JacobiTriple a = resc_sncndn(u, m);
        JacobiTriple b = resc_sncndn(u + t, m);
        worst = std::max({worst,
                          std::abs(a.dn * b.sn - (a.cn * r.sn + a.sn * r.cn * b.dn)),
                          std::abs(b.cn - (a.cn * r.cn - a.sn * r.sn * b.dn))});
        double md = dual_parameter(m);
        worst = std::max({worst,
                          std::abs(kp * resc_sd(t, m) - resc_sn(t, md)),
                          std::abs(resc_cd(t, m) - resc_cn(t, md)),
                          std::abs(1.0 / r.dn - resc_dn(t, md))});
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("quotients match their definitions") {
    std::mt19937 rng(4);
    for (int i = 0; i < 50; ++i) {
        double m = uniform(rng, -25.0, 0.99);
        double t = uniform(rng, -4 * kPi, 4 * kPi);
        JacobiTriple r = resc_sncndn(t, m);
        CHECK(resc_sd(t, m) == doctest::Approx(r.sn / r.dn).epsilon(1e-14));
        CHECK(resc_cd(t, m) == doctest::Approx(r.cn / r.dn).epsilon(1e-14));
    }
}

TEST_CASE("derivatives against central differences") {
    std::mt19937 rng(5);
    double worst = 0, h = 1e-6;
    for (int i = 0; i < 200; ++i) {
        double m = uniform(rng, -25.0, 0.99);
        double t = uniform(rng, -6.0, 6.0);
        JacobiTriple d = resc_sncndn_derivs(t, m);
        worst = std::max(
            {worst, std::abs(d.sn - (resc_sn(t + h, m) - resc_sn(t - h, m)) / (2 * h)),
             std::abs(d.cn - (resc_cn(t + h, m) - resc_cn(t - h, m)) / (2 * h)),
             std::abs(d.dn - (resc_dn(t + h, m) - resc_dn(t - h, m)) / (2 * h))});
    }
    CHECK(worst < 1e-8);
    CHECK(resc_sn_deriv(0.3, 0.4) == resc_sncndn_derivs(0.3, 0.4).sn);
    CHECK(resc_cn_deriv(0.3, 0.4) == resc_sncndn_derivs(0.3, 0.4).cn);
    CHECK(resc_dn_deriv(0.3, 0.4) == resc_sncndn_derivs(0.3, 0.4).dn);
}

TEST_CASE("small-m leading corrections") {
    // sn = sin(t)(1 + (m/4) cos^2 t) + O(m^2), cn = cos(t)(1 - (m/4) sin^2 t)
    // + O(m^2), dn = 1 - (m/2) sin^2 t + O(m^2): residuals shrink like m^2.
    auto residual = [](double m) {
        double worst = 0;
        for (int i = 0; i < 40; ++i) {
            double t = 2 * kPi * i / 40.0;
            double s = std::sin(t), c = std::cos(t);
            JacobiTriple r = resc_sncndn(t, m);
            worst = std::max({worst, std::abs(r.sn - s * (1 + m / 4 * c * c)),
                              std::abs(r.cn - c * (1 - m / 4 * s * s)),
                              std::abs(r.dn - (1 - m / 2 * s * s))});
        }
        return worst;
    };
    double r2 = residual(1e-2), r3 = residual(1e-3);
    CHECK(r2 / r3 > 50);
    CHECK(r2 / r3 < 200);
    CHECK(residual(1e-4) < 1e-7);
}

TEST_CASE("parameter bundle") {
    EllipticParameter p = make_parameter(-1.5);
    CHECK(p.m == -1.5);
    CHECK(p.kprime == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
    CHECK(p.mDual == doctest::Approx(1.5 / 2.5).epsilon(1e-15));
    CHECK(p.scale == doctest::Approx(2 * complete_K(-1.5) / kPi).epsilon(1e-15));
    CHECK(resc_sn(0.7, p) == resc_sn(0.7, -1.5));
    CHECK_THROWS_AS(make_parameter(1.0), std::domain_error);
}
