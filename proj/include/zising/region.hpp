#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace zising {

// Fixed-point-free involution of [2n], stored 1-based: tau[j-1] is the partner
// of mark j.
struct Involution {
    std::vector<int> tau;
    int size() const { return static_cast<int>(tau.size()); }
};

// A region is the pair (tau, alpha): 2n marks on the boundary circle, paired
// by tau into n chords, with a half-angle alpha_j at each mark. Valid regions
// satisfy
//   (cond_1)  alpha_{tau(j)} = alpha_j + pi/2            for j < tau(j),
//   (cond_2)  alpha_j < alpha_k < alpha_{tau(j)} < alpha_{tau(k)}
//             whenever j < k < tau(j) < tau(k).
// Lifts extend tau and alpha to all integers: tau~(j+2n) = tau~(j) + 2n with
// j < tau~(j) < j + 2n, and alpha~(j+2n) = alpha~(j) + pi.
struct Region {
    Involution inv;
    std::vector<double> alpha;

    int n2() const { return inv.size(); }
    int n() const { return inv.size() / 2; }
    int tau(int j) const { return inv.tau[j - 1]; }
    long tau_lift(long j) const;
    double alpha_lift(long j) const;
};

// Empty list iff the region is valid; never throws.
std::vector<std::string> validate(const Region& r, double condTol = 1e-12);

// Strict cyclic order of the triple (p, j, k) on [1, n2].
bool cyclic_order(int p, int j, int k, int n2);

// J_p = { j : (p, j, tau(j)) in strict cyclic order }, ascending.
std::vector<int> j_set(const Region& r, int p);

// Lifted representatives { tau~(j) : p - 2n < j < p, tau~(j) > p }, all lying
// in the open window (p, p + 2n); coincides with J_p modulo 2n.
std::vector<long> j_set_lifted(const Region& r, int p);

// All pairs (j, k) with j < k < tau(j) < tau(k).
std::vector<std::pair<int, int>> crossings(const Region& r);

// Indices j in [1, 2n] with j + 1 < tau~(j) < tau~(j+1).
std::vector<int> tau_descents(const Region& r);

// The swap R -> R . t_j at a tau-descent j: conjugates tau by the
// transposition (j, j+1) and swaps the two angles. The j = 2n case swaps
// across the lifted seam: alpha'_1 = alpha_{2n} - pi, alpha'_{2n} = alpha_1 + pi.
// Removes exactly one crossing. Throws std::invalid_argument if j is not a
// descent.
Region apply_descent(const Region& r, int j);

// Regular 2n-gon: tau(j) = j + n (mod 2n), alpha_j = (j-1) pi / (2n).
Region regular_region(int n);

// Deterministic valid shape for an arbitrary involution. Each chord pair
// (j, tau(j)) gets alpha_j = (mu - 1) pi / (4n) + c pi / (64 n^2) with
// mu = (j + tau(j)) / 2 and c the 1-based rank of the pair; crossing pairs
// then satisfy 0 < alpha_k - alpha_j < pi/2 with margin > pi/(8n), all angles
// are distinct and no direction repeats mod pi. Throws if the result fails
// validation (not reachable for a genuine involution).
Region canonical_shape(const Involution& inv);

// Witness quadruple i<j<k<l with v_i = -v_j = v_k = -v_l, where v = e^{2 i
// alpha} and equality is angle congruence mod pi within tol.
std::optional<std::array<int, 4>> alternation_witness(const Region& r, double tol = 1e-9);
bool is_alternating(const Region& r);

// Marks visited going from p to tau(p) counterclockwise, inclusive.
std::vector<int> supp(const Region& r, int p);

// m_p = #{ j in J_p : v_j = v_p }.
int multiplicity(const Region& r, int p);

// Enumeration and sampling of fixed-point-free involutions (test utilities,
// also used by the verification suites).
std::vector<Involution> all_involutions(int n2);
Involution random_involution(int n2, std::mt19937& rng);
Involution noncrossing_involution(int n2, std::mt19937& rng);

}  // namespace zising
