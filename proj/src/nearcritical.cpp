#include "zising/nearcritical.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "zising/correlations.hpp"

namespace zising {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_distinct_angles(const Region& r) {
    for (std::size_t i = 0; i < r.alpha.size(); ++i)
        for (std::size_t j = i + 1; j < r.alpha.size(); ++j)
            if (std::abs(r.alpha[i] - r.alpha[j]) < 1e-12)
                throw std::invalid_argument("critical factorization: repeated angles");
}

std::vector<double> lifted_angles(const Region& r, int p) {
    std::vector<double> ang;
    for (long tj : j_set_lifted(r, p)) ang.push_back(r.alpha_lift(tj));
    return ang;
}

Eigen::MatrixXd gamma0_at_basis(const Region& r, std::vector<double>& ts) {
    auto idx = basis_row_indices(r);
    ts.clear();
    for (int j : idx) ts.push_back(r.alpha[j - 1]);
    Eigen::MatrixXd g0(static_cast<int>(ts.size()), r.n2());
    for (std::size_t i = 0; i < ts.size(); ++i)
        g0.row(static_cast<int>(i)) = gamma_curve(r, 0.0, ts[i]).transpose();
    return g0;
}

}  // namespace

ExpansionSample gamma_expansion(const Region& r, double t) {
    int n2 = r.n2();
    ExpansionSample out;
    out.t = t;
    out.zeroth = gamma_curve(r, 0.0, t);
    out.secondOrder.resize(n2);
    for (int p = 1; p <= n2; ++p) {
        double prod = 1.0, s1 = 0.0, s2 = 0.0;
        for (double a : lifted_angles(r, p)) {
            prod *= std::sin(t - a);
            double c = std::cos(t - a);
            s1 += c * c;
        }
        for (int j = 1; j <= 2 * (p / 2); ++j) s2 += std::cos(2.0 * (t - r.alpha[j - 1]));
        out.secondOrder(p - 1) = 0.25 * prod * (s1 + s2);
    }
    return out;
}

Eigen::MatrixXd critical_F_matrix(const Region& r) {
    require_distinct_angles(r);
    int n = r.n(), n2 = r.n2();
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n2);
    for (int p = 1; p <= n2; ++p) {
        auto ang = lifted_angles(r, p);
        int sz = static_cast<int>(ang.size());
        for (unsigned mask = 0; mask < (1u << sz); ++mask) {
            double prod = 1.0;
            for (int q = 0; q < sz; ++q)
                prod *= (mask >> q & 1u) ? std::sin(ang[q]) : std::cos(ang[q]);
            f(std::popcount(mask), p - 1) += prod;
        }
    }
    return f;
}

FactorizationResiduals critical_factorization_checks(const Region& r) {
    using cd = std::complex<double>;
    int n = r.n(), n2 = r.n2();
    Eigen::MatrixXd f = critical_F_matrix(r);

    std::vector<double> ts;
    Eigen::MatrixXd g0 = gamma0_at_basis(r, ts);
    Eigen::MatrixXd v(n, n);
    for (int i = 0; i < n; ++i)
        for (int l = 1; l <= n; ++l)
            v(i, l - 1) = std::pow(-std::cos(ts[i]), l - 1) * std::pow(std::sin(ts[i]), n - l);

    FactorizationResiduals out;
    out.realReconstruction = (v * f - g0).cwiseAbs().maxCoeff();

    Eigen::MatrixXcd fc = Eigen::MatrixXcd::Zero(n, n2);
    cd pref = std::pow(cd(0, 2), 1 - n);
    for (int p = 1; p <= n2; ++p) {
        auto ang = lifted_angles(r, p);
        int sz = static_cast<int>(ang.size());
        for (unsigned mask = 0; mask < (1u << sz); ++mask) {
            double ph = 0;
            for (int q = 0; q < sz; ++q) ph += (mask >> q & 1u) ? ang[q] : -ang[q];
            int l = static_cast<int>(std::popcount(mask)) + 1;
            fc(l - 1, p - 1) += pref * ((l % 2 == 1) ? 1.0 : -1.0) * std::exp(cd(0, ph));
        }
    }
    for (int l = 1; l <= n; ++l) {
        cd z = std::exp(cd(0, kPi * (2 * l - n - 1) / (2 * n)));
        cd d = fc(l - 1, 0);
        cd zp = 1.0;
        for (int p = 1; p <= n2; ++p, zp *= z)
            out.phaseFactorization = std::max(out.phaseFactorization, std::abs(fc(l - 1, p - 1) - d * zp));
    }

    Eigen::MatrixXcd vc(n, n);
    for (int i = 0; i < n; ++i)
        for (int l = 1; l <= n; ++l) vc(i, l - 1) = std::exp(cd(0, ts[i] * (n + 1 - 2 * l)));
    Eigen::MatrixXcd rec = vc * fc;
    out.complexReconstruction = (rec.real() - g0).cwiseAbs().maxCoeff();
    out.imaginaryPart = rec.imag().cwiseAbs().maxCoeff();
    return out;
}

}  // namespace zising
