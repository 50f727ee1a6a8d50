#include "zising/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

#include "zising/arrangement.hpp"
#include "zising/elliptic.hpp"
#include "zising/rng.hpp"

namespace zising {

namespace {

constexpr double kPi = 3.14159265358979323846;

long floor_mod(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

double positive_fmod(double x, double p) {
    double r = std::fmod(x, p);
    return r < 0 ? r + p : r;
}

bool basis_directions_repeat(const Region& r) {
    auto idx = basis_row_indices(r);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            double d = (r.alpha[idx[i] - 1] - r.alpha[idx[j] - 1]) / kPi;
            if (std::abs(d - std::round(d)) < 1e-9 / kPi) return true;
        }
    return false;
}

}  // namespace

double gamma_coord(const Region& r, double m, double t, long p) {
    int n2 = r.n2();
    double kp = std::sqrt(1.0 - m);
    long base = floor_mod(p - 1, n2) + 1;
    long s = (p - base) / n2;
    double val = 1.0;
    for (long j = 1; j <= 2 * (base / 2); ++j)
        val *= resc_dn(t - r.alpha_lift(j + s * n2), m) / std::sqrt(kp);
    for (long tj : j_set_lifted(r, static_cast<int>(base)))
        val *= resc_sn(t - r.alpha_lift(tj + s * n2), m);
    return val;
}

Eigen::VectorXd gamma_curve(const Region& r, double m, double t) {
    Eigen::VectorXd out(r.n2());
    for (int p = 1; p <= r.n2(); ++p) out(p - 1) = gamma_coord(r, m, t, p);
    return out;
}

Eigen::VectorXd gamma_sign_form(const Region& r, double m, double t) {
    int n2 = r.n2();
    double kp = std::sqrt(1.0 - m);
    Eigen::VectorXd out(n2);
    for (int p = 1; p <= n2; ++p) {
        auto jp = j_set(r, p);
        int inPrefix = 0;
        for (int j : jp)
            if (j <= p) ++inPrefix;
        double val = (inPrefix % 2 == 0) ? 1.0 : -1.0;
        for (int j = 1; j <= 2 * (p / 2); ++j)
            val *= resc_dn(t - r.alpha[j - 1], m) / std::sqrt(kp);
        for (int j : jp) val *= resc_sn(t - r.alpha[j - 1], m);
        out(p - 1) = val;
    }
    return out;
}

Eigen::MatrixXd k_matrix(int n) {
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(2 * n, n);
    for (int i = 0; i < n; ++i) k(2 * i, i) = k(2 * i + 1, i) = 0.5;
    return k;
}

std::vector<int> basis_row_indices(const Region& r) {
    std::vector<int> idx = j_set(r, 1);
    idx.push_back(1);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

Eigen::MatrixXd basis_matrix(const Region& r, double m) {
    if (basis_directions_repeat(r))
        throw std::invalid_argument(
            "basis_matrix: repeated directions among the basis angles make the sample rows "
            "dependent; use alternating_basis");
    auto idx = basis_row_indices(r);
    Eigen::MatrixXd a(static_cast<int>(idx.size()), r.n2());
    for (std::size_t i = 0; i < idx.size(); ++i)
        a.row(static_cast<int>(i)) = gamma_curve(r, m, r.alpha[idx[i] - 1]).transpose();
    return a;
}

DoubledResult doubled_matrix(const Eigen::MatrixXd& A) {
    int n = static_cast<int>(A.rows());
    Eigen::MatrixXd ak = A * k_matrix(n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ak);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(n - 1);
    if (!(smin > 0) || !std::isfinite(smax / smin))
        throw std::runtime_error("doubled_matrix: A K_n is numerically singular (condition ~ " +
                                 std::to_string(smax / std::max(smin, 1e-300)) + ")");
    DoubledResult out;
    out.cond = smax / smin;
    out.mtilde = Eigen::PartialPivLU<Eigen::MatrixXd>(ak).solve(A);
    return out;
}

Eigen::MatrixXd extract_correlations(const Eigen::MatrixXd& mtilde) {
    int n = static_cast<int>(mtilde.rows());
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            double sgn = ((i + j + (i < j ? 1 : 0)) % 2 == 0) ? 1.0 : -1.0;
            m(i - 1, j - 1) = sgn * mtilde(i - 1, 2 * j - 2);
        }
    return m;
}

CorrelationResult correlation_matrix(const Region& r, double m) {
    auto violations = validate(r);
    if (!violations.empty())
        throw std::invalid_argument("correlation_matrix: invalid region: " + violations.front());
    Eigen::MatrixXd a =
        basis_directions_repeat(r) ? alternating_basis(r, m) : basis_matrix(r, m);
    DoubledResult d = doubled_matrix(a);
    return {extract_correlations(d.mtilde), d.mtilde, d.cond};
}

Eigen::MatrixXd transfer_matrix(const Region& r, double m, int j) {
    int n2 = r.n2(), n = r.n();
    if (j < 1 || j > n2) throw std::invalid_argument("transfer_matrix: index out of range");
    if (r.tau_lift(j) == j + 1)
        throw std::invalid_argument("transfer_matrix: undefined when tau(j) = j+1");
    double d = r.alpha_lift(j + 1) - r.alpha_lift(j);
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n2, n2);
    if (j < n2) {
        double c, s;
        if (j % 2 == 1) {
            double md = dual_parameter(m);
            c = resc_cn(d, md);
            s = resc_sn(d, md);
        } else {
            c = resc_cn(d, m);
            s = resc_sn(d, m);
        }
        g(j - 1, j - 1) = g(j, j) = 1.0 / c;
        g(j - 1, j) = g(j, j - 1) = s / c;
    } else {
        double c = resc_cn(d, m), s = resc_sn(d, m);
        double sgn = (n % 2 == 1) ? 1.0 : -1.0;
        g(0, 0) = g(n2 - 1, n2 - 1) = 1.0 / c;
        g(0, n2 - 1) = g(n2 - 1, 0) = sgn * s / c;
    }
    return g;
}

double descent_transport_check(const Region& r, double m, int j,
                               const std::vector<double>& tSamples) {
    Eigen::MatrixXd g = transfer_matrix(r, m, j);
    Region r2 = apply_descent(r, j);
    double worst = 0;
    for (double t : tSamples) {
        Eigen::VectorXd lhs = gamma_curve(r, m, t);
        Eigen::VectorXd rhs = g.transpose() * gamma_curve(r2, m, t);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

namespace {

// A monomial in shifted elliptic factors: per distinct shift a, the exponents
// of sn(t-a), cn(t-a), dn(t-a). Keys are canonical (sorted), so merging terms
// during repeated differentiation is a map insert.
using Factor = std::tuple<double, int, int, int>;
using MonomialKey = std::vector<Factor>;

MonomialKey with_factor(MonomialKey key, std::size_t drop, Factor add) {
    key.erase(key.begin() + static_cast<long>(drop));
    key.push_back(add);
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

Eigen::VectorXd gamma_derivative(const Region& r, double m, double t, int order) {
    if (order < 0) throw std::invalid_argument("gamma_derivative: negative order");
    int n2 = r.n2();
    double kp = std::sqrt(1.0 - m);
    double sc = elliptic_scale(m);
    Eigen::VectorXd out(n2);
    for (int p = 1; p <= n2; ++p) {
        double coeff = std::pow(kp, -(p / 2));
        MonomialKey key;
        for (int j = 1; j <= 2 * (p / 2); ++j)
            key.emplace_back(positive_fmod(r.alpha[j - 1], kPi), 0, 0, 1);  // dn is pi-periodic
        for (long tj : j_set_lifted(r, p)) {
            double red = positive_fmod(r.alpha_lift(tj), 2 * kPi);
            if (red >= kPi) {  // sn(x - a - pi) = -sn(x - a)
                red -= kPi;
                coeff = -coeff;
            }
            key.emplace_back(red, 1, 0, 0);
        }
        std::sort(key.begin(), key.end());
        std::map<MonomialKey, double> monos;
        monos[key] = coeff;
        for (int step = 0; step < order; ++step) {
            std::map<MonomialKey, double> next;
            for (const auto& [k, cf] : monos) {
                for (std::size_t i = 0; i < k.size(); ++i) {
                    auto [a, es, ec, ed] = k[i];
                    if (es) next[with_factor(k, i, {a, es - 1, ec + 1, ed + 1})] += cf * es * sc;
                    if (ec) next[with_factor(k, i, {a, es + 1, ec - 1, ed + 1})] -= cf * ec * sc;
                    if (ed) next[with_factor(k, i, {a, es + 1, ec + 1, ed - 1})] -= cf * ed * sc * m;
                }
            }
            monos = std::move(next);
        }
        double val = 0;
        for (const auto& [k, cf] : monos) {
            double v = cf;
            for (const auto& [a, es, ec, ed] : k) {
                JacobiTriple tr = resc_sncndn(t - a, m);
                v *= std::pow(tr.sn, es) * std::pow(tr.cn, ec) * std::pow(tr.dn, ed);
            }
            val += v;
        }
        out(p - 1) = val;
    }
    return out;
}

Eigen::MatrixXd alternating_basis(const Region& r, double m) {
    auto idx = basis_row_indices(r);
    int n2 = r.n2();
    Eigen::MatrixXd rows(static_cast<int>(idx.size()), n2);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        int j = idx[i];
        Eigen::VectorXd v = gamma_derivative(r, m, r.alpha[j - 1], multiplicity(r, j));
        Eigen::VectorXd mask = Eigen::VectorXd::Zero(n2);
        for (int s : supp(r, j)) mask(s - 1) = 1.0;
        rows.row(static_cast<int>(i)) = (v.array() * mask.array()).matrix().transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
    const auto& sv = svd.singularValues();
    if (!(sv(sv.size() - 1) > 1e-10 * sv(0))) {
        std::string msg = "alternating_basis: rank deficient; singular values:";
        for (int i = 0; i < sv.size(); ++i) msg += " " + std::to_string(sv(i));
        throw std::runtime_error(msg);
    }
    return rows;
}

double discrete_derivative(const std::function<double(double)>& f,
                           const std::vector<double>& anchors, double x) {
    for (std::size_t i = 0; i < anchors.size(); ++i)
        for (std::size_t j = i + 1; j < anchors.size(); ++j)
            if (anchors[i] == anchors[j])
                throw std::invalid_argument("discrete_derivative: anchors must be distinct");
    std::function<double(std::size_t, double)> dd = [&](std::size_t i, double y) -> double {
        if (i == anchors.size()) return f(y);
        return (dd(i + 1, y) - dd(i + 1, anchors[i])) / (y - anchors[i]);
    };
    return dd(0, x);
}

Region dual_region(const Region& r) {
    int n2 = r.n2();
    Region d;
    d.inv.tau.resize(n2);
    d.alpha.resize(n2);
    for (int l = 1; l <= n2; ++l) {
        d.alpha[l - 1] = r.alpha_lift(l - 1);
        d.inv.tau[l - 1] = static_cast<int>(floor_mod(r.tau_lift(l - 1), n2)) + 1;
    }
    return d;
}

double dual_gamma_coord(const Region& r, double m, double t, long p) {
    return gamma_coord(dual_region(r), dual_parameter(m), t, p);
}

Eigen::VectorXd dual_gamma(const Region& r, double m, double t) {
    return gamma_curve(dual_region(r), dual_parameter(m), t);
}

Eigen::MatrixXd shift_S(int n) {
    int n2 = 2 * n;
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n2, n2);
    for (int j = 1; j < n2; ++j) s(j - 1, j) = 1.0;
    s(n2 - 1, 0) = (n % 2 == 1) ? 1.0 : -1.0;
    return s;
}

Eigen::MatrixXd span_projector(const Eigen::MatrixXd& rows) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * sv(0)) ++rank;
    Eigen::MatrixXd v = svd.matrixV().leftCols(rank);
    return v * v.transpose();
}

DualityResiduals duality_checks(const Region& r, double m, int tCount, unsigned seed) {
    std::mt19937 rng(seed);
    int n2 = r.n2(), n = r.n();
    Region rs = dual_region(r);
    double md = dual_parameter(m);
    DualityResiduals out;

    int done = 0;
    for (int guard = 0; done < tCount && guard < 40 * tCount; ++guard) {
        double t = uniform(rng, 0, 2 * kPi);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo, amax = 0;
        bool usable = true;
        for (int p = 1; p <= n2; ++p) {
            double den = gamma_coord(rs, md, t, p + 1);
            if (std::abs(den) < 1e-8) {  // resample near a zero of the dual curve
                usable = false;
                break;
            }
            double ratio = gamma_coord(r, m, t, p) / den;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            amax = std::max(amax, std::abs(ratio));
        }
        if (!usable) continue;
        out.ratioSpread = std::max(out.ratioSpread, (hi - lo) / amax);
        ++done;
    }

    Eigen::MatrixXd g1(4 * n, n2), g2(4 * n, n2);
    Eigen::MatrixXd s = shift_S(n);
    for (int i = 0; i < 4 * n; ++i) {
        double t = uniform(rng, 0, 2 * kPi);
        g1.row(i) = (s.transpose() * gamma_curve(r, m, t)).transpose();
        g2.row(i) = gamma_curve(rs, md, t).transpose();
    }
    out.projectorDistance = (span_projector(g1) - span_projector(g2)).cwiseAbs().maxCoeff();

    ChordArrangement arr = build_arrangement(r, 0);
    IsingGraph graph = build_black_graph(arr, m);
    for (const auto& e : graph.edges) {
        JacobiTriple tr = resc_sncndn(kPi / 2 - e.theta, md);
        double jdual = 0.5 * std::log((1 + tr.sn) / tr.cn);
        out.kwResidual = std::max(
            out.kwResidual, std::abs(std::sinh(2 * e.coupling) * std::sinh(2 * jdual) - 1));
    }
    return out;
}

}  // namespace zising
