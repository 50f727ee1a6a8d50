#include "zising/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "zising/correlations.hpp"

namespace zising {

namespace {

// Visits every configuration of spins 1..nv-1 (spin 0 held at +1) in Gray
// order, maintaining the energy incrementally; calls f(sig, energy) for each.
template <typename F>
void enumerate_gauge_fixed(const IsingGraph& g, F&& f) {
    int nv = g.numVertices;
    std::vector<int> sig(nv, 1);
    double e = 0;
    for (const auto& ed : g.edges) e += ed.coupling;
    f(sig, e);
    if (nv <= 1) return;
    std::uint64_t total = 1ull << (nv - 1);
    for (std::uint64_t i = 1; i < total; ++i) {
        int fb = std::countr_zero(i) + 1;  // flip spins 1..nv-1 only
        double de = 0;
        for (const auto& ed : g.edges)
            if ((ed.u == fb) != (ed.v == fb)) de += -2.0 * ed.coupling * sig[ed.u] * sig[ed.v];
        sig[fb] = -sig[fb];
        e += de;
        f(sig, e);
    }
}

}  // namespace

OracleResult exact_correlations(const IsingGraph& g) {
    int nv = g.numVertices;
    if (nv > 24)
        throw std::invalid_argument(
            "exact_correlations: more than 24 vertices; use the curve formula instead");
    int n = static_cast<int>(g.boundary.size());

    double emax = -1e300;
    enumerate_gauge_fixed(g, [&](const std::vector<int>&, double e) {
        if (e > emax) emax = e;
    });

    double z = 0;
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    enumerate_gauge_fixed(g, [&](const std::vector<int>& sig, double e) {
        double w = std::exp(e - emax);
        z += w;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s(i, j) += w * sig[g.boundary[i]] * sig[g.boundary[j]];
    });

    OracleResult out;
    out.correlations = s / z;
    out.logZ = std::log(z) + emax + std::log(2.0);  // restore the gauge factor
    return out;
}

Eigen::MatrixXd oracle_correlation_matrix(const Region& r, double m, int seed) {
    ChordArrangement a = build_arrangement(r, seed);
    IsingGraph g = build_black_graph(a, m);
    return exact_correlations(g).correlations;
}

double z_invariance_check(const Region& r, double m, const std::vector<int>& seeds) {
    std::vector<Eigen::MatrixXd> ms;
    ms.reserve(seeds.size());
    for (int s : seeds) ms.push_back(oracle_correlation_matrix(r, m, s));
    double worst = 0;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            worst = std::max(worst, (ms[i] - ms[j]).cwiseAbs().maxCoeff());
    return worst;
}

double formula_vs_oracle(const Region& r, double m, int seed) {
    Eigen::MatrixXd mf = correlation_matrix(r, m).M;
    Eigen::MatrixXd mo = oracle_correlation_matrix(r, m, seed);
    return (mf - mo).cwiseAbs().maxCoeff();
}

}  // namespace zising
