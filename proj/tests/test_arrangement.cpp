#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "support.hpp"
#include "zising/correlations.hpp"
#include "zising/elliptic.hpp"
#include "zising/oracle.hpp"

using namespace zising;
using ztest::kPi;
using ztest::max_abs;

TEST_CASE("square arrangement: 4 cells, 2 black, 1 edge, closed-form oracle") {
    Region sq = ztest::square();
    ChordArrangement a = build_arrangement(sq, 0);
    CHECK(a.chords.size() == 2);
    CHECK(a.crossings.size() == 1);
    IsingGraph g = build_black_graph(a, 0.5);
    CHECK(g.numCells == 4);
    CHECK(g.numVertices == 2);
    REQUIRE(g.edges.size() == 1);
    double kp = std::sqrt(0.5);
    OracleResult res = exact_correlations(g);
    CHECK(std::abs(res.correlations(0, 1) - 1 / (std::sqrt(kp) + std::sqrt(1 + kp))) < 1e-12);
    // one edge between two spins: Z = 4 cosh(J)
    CHECK(std::abs(res.logZ - std::log(4 * std::cosh(g.edges[0].coupling))) < 1e-12);
}

TEST_CASE("half-angle rule calibration on an asymmetric two-chord region") {
    double th = kPi / 6;
    Region asym = ztest::asym_square(th);
    double worst = 0;
    for (double m : {0.0, 0.5, -0.8, 0.9}) {
        CorrelationResult f = correlation_matrix(asym, m);
        Eigen::MatrixXd mo = oracle_correlation_matrix(asym, m, 0);
        worst = std::max(worst, std::abs(f.M(0, 1) - mo(0, 1)));
    }
    CHECK(worst < 1e-10);
    CorrelationResult f0 = correlation_matrix(asym, 0.0);
    CHECK(std::abs(f0.M(0, 1) - std::cos(th) / (1 + std::sin(th))) < 1e-12);
}

TEST_CASE("hexagon: cell census and formula vs enumeration") {
    Region hexa = regular_region(3);
    ChordArrangement a = build_arrangement(hexa, 0);
    IsingGraph g = build_black_graph(a, 0.3);
    CHECK(g.numCells == 7);
    CHECK(g.edges.size() == 3);
    CHECK((g.numVertices == 3 || g.numVertices == 4));
    double worst = 0;
    for (double m : {-0.9, 0.0, 0.5, 0.9})
        worst = std::max(worst, formula_vs_oracle(hexa, m, 0));
    CHECK(worst < 1e-10);
}

TEST_CASE("hexagon: two commutation classes, invariant enumeration") {
    Region hexa = regular_region(3);
    std::map<std::vector<std::vector<int>>, std::vector<int>> classes;
    for (int seed = 0; seed < 32; ++seed)
        classes[crossing_order_signature(build_arrangement(hexa, seed))].push_back(seed);
    REQUIRE(classes.size() == 2);
    std::vector<int> reps;
    for (const auto& [sig, seeds] : classes) reps.push_back(seeds.front());
    double worst = 0;
    for (double m : {0.0, 0.5, -2.0}) {
        Eigen::MatrixXd m1 = oracle_correlation_matrix(hexa, m, reps[0]);
        Eigen::MatrixXd m2 = oracle_correlation_matrix(hexa, m, reps[1]);
        worst = std::max(worst, max_abs(m1 - m2));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("random regions: formula agrees with enumeration") {
    std::mt19937 rng(21);
    double worst = 0;
    for (int count = 0; count < 10; ++count) {
        Region r = ztest::random_region(rng, 2, 5);
        double m = uniform(rng, -5.0, 0.95);
        worst = std::max(worst, formula_vs_oracle(r, m, uniform_int(rng, 0, 100)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("fully nested involution contracts every boundary label to one spin") {
    Region rc = canonical_shape(Involution{{4, 3, 2, 1}});
    Eigen::MatrixXd mo = oracle_correlation_matrix(rc, 0.5, 0);
    CHECK(std::abs(mo(0, 1) - 1) < 1e-14);
    CorrelationResult f = correlation_matrix(rc, 0.5);
    CHECK(std::abs(f.M(0, 1) - 1) < 1e-9);
    CHECK(std::abs(f.mtilde(0, 0) - 1) < 1e-9);
    CHECK(std::abs(f.mtilde(0, 1) - 1) < 1e-9);
}

TEST_CASE("enumeration is independent of the jitter seed") {
    std::mt19937 rng(22);
    double worst = 0;
    for (int trial = 0; trial < 3; ++trial) {
        Region r = ztest::random_region(rng, 4, 4);
        double m = uniform(rng, -2.0, 0.9);
        worst = std::max(worst, z_invariance_check(r, m, {0, 1, 2, 3, 4}));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("single chord: two cells, no edges, free spin") {
    Region r1 = canonical_shape(Involution{{2, 1}});
    ChordArrangement a = build_arrangement(r1, 0);
    IsingGraph g = build_black_graph(a, 0.4);
    CHECK(g.numCells == 2);
    CHECK(g.numVertices == 1);
    CHECK(g.edges.empty());
    OracleResult res = exact_correlations(g);
    CHECK(std::abs(res.logZ - std::log(2.0)) < 1e-14);
    CHECK(res.correlations(0, 0) == 1.0);
}

TEST_CASE("couplings are ferromagnetic with half-angles in (0, pi/2)") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        Region r = ztest::random_region(rng, 2, 5);
        double m = uniform(rng, -3.0, 0.9);
        IsingGraph g = build_black_graph(build_arrangement(r, trial), m);
        CHECK(g.numCells == 1 + r.n() + static_cast<int>(crossings(r).size()));
        for (const IsingEdge& e : g.edges) {
            CHECK(e.theta > 0);
            CHECK(e.theta < kPi / 2 + 1e-12);
            CHECK(e.coupling > 0);
        }
        for (int b : g.boundary) {
            CHECK(b >= 0);
            CHECK(b < g.numVertices);
        }
    }
}

TEST_CASE("enumeration refuses oversized graphs") {
    IsingGraph g;
    g.numVertices = 25;
    CHECK_THROWS_AS((void)exact_correlations(g), std::invalid_argument);
}
