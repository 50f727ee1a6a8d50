#include "zising/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zising/rng.hpp"

namespace zising {

namespace {

constexpr double kPi = 3.14159265358979323846;

long floor_mod(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

// v_a = v_b (direction equality): alpha_a - alpha_b is a multiple of pi; with
// flip, an odd multiple of pi/2.
bool direction_equal(const Region& r, int a, int b, bool flip, double tol) {
    double d = (r.alpha[a - 1] - r.alpha[b - 1]) / kPi;
    if (flip) d += 0.5;
    return std::abs(d - std::round(d)) < tol / kPi;
}

}  // namespace

long Region::tau_lift(long j) const {
    long m = n2();
    long k = floor_mod(j - 1, m) + 1;
    long s = (j - k) / m;
    long tk = tau(static_cast<int>(k));
    if (tk < k) tk += m;
    return tk + s * m;
}

double Region::alpha_lift(long j) const {
    long m = n2();
    long k = floor_mod(j - 1, m) + 1;
    long s = (j - k) / m;
    return alpha[k - 1] + static_cast<double>(s) * kPi;
}

std::vector<std::string> validate(const Region& r, double condTol) {
    std::vector<std::string> v;
    int n2 = r.n2();
    if (n2 == 0 || n2 % 2 != 0) {
        v.push_back("tau must pair an even, positive number of marks");
        return v;
    }
    if (static_cast<int>(r.alpha.size()) != n2) {
        v.push_back("alpha length does not match tau length");
        return v;
    }
    for (int j = 1; j <= n2; ++j) {
        int tj = r.tau(j);
        if (tj < 1 || tj > n2) {
            v.push_back("tau value out of range at " + std::to_string(j));
            return v;
        }
    }
    for (int j = 1; j <= n2; ++j) {
        if (r.tau(j) == j)
            v.push_back("fixed point at " + std::to_string(j));
        else if (r.tau(r.tau(j)) != j)
            v.push_back("not an involution at " + std::to_string(j));
    }
    if (!v.empty()) return v;
    for (int j = 1; j <= n2; ++j) {
        int tj = r.tau(j);
        if (j < tj && std::abs(r.alpha[tj - 1] - r.alpha[j - 1] - kPi / 2) > condTol)
            v.push_back("cond_1 violated at " + std::to_string(j));
    }
    for (auto [j, k] : crossings(r)) {
        double a0 = r.alpha[j - 1], a1 = r.alpha[k - 1];
        double a2 = r.alpha[r.tau(j) - 1], a3 = r.alpha[r.tau(k) - 1];
        if (!(a0 < a1 && a1 < a2 && a2 < a3))
            v.push_back("cond_2 violated at (" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
    return v;
}

bool cyclic_order(int p, int j, int k, int n2) {
    if (p == j || j == k || p == k) return false;
    int a = static_cast<int>(floor_mod(j - p, n2));
    int b = static_cast<int>(floor_mod(k - p, n2));
    return a < b;
}

std::vector<int> j_set(const Region& r, int p) {
    if (p < 1 || p > r.n2()) throw std::out_of_range("j_set: index out of range");
    std::vector<int> out;
    for (int j = 1; j <= r.n2(); ++j)
        if (j != p && r.tau(j) != p && cyclic_order(p, j, r.tau(j), r.n2()))
            out.push_back(j);
    return out;
}

std::vector<long> j_set_lifted(const Region& r, int p) {
    if (p < 1 || p > r.n2()) throw std::out_of_range("j_set_lifted: index out of range");
    std::vector<long> out;
    for (long j = p - r.n2() + 1; j < p; ++j) {
        long tj = r.tau_lift(j);
        if (tj > p) out.push_back(tj);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> crossings(const Region& r) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= r.n2(); ++j)
        for (int k = j + 1; k <= r.n2(); ++k)
            if (k < r.tau(j) && r.tau(j) < r.tau(k)) out.emplace_back(j, k);
    return out;
}

std::vector<int> tau_descents(const Region& r) {
    std::vector<int> out;
    for (int j = 1; j <= r.n2(); ++j) {
        long tj = r.tau_lift(j), tj1 = r.tau_lift(j + 1);
        if (j + 1 < tj && tj < tj1) out.push_back(j);
    }
    return out;
}

Region apply_descent(const Region& r, int j) {
    auto ds = tau_descents(r);
    if (std::find(ds.begin(), ds.end(), j) == ds.end())
        throw std::invalid_argument("apply_descent: index " + std::to_string(j) +
                                    " is not a tau-descent");
    int n2 = r.n2();
    int jj = (j < n2) ? j + 1 : 1;
    auto t = [&](int l) {
        if (l == j) return jj;
        if (l == jj) return j;
        return l;
    };
    Region out;
    out.inv.tau.resize(n2);
    for (int l = 1; l <= n2; ++l) out.inv.tau[l - 1] = t(r.tau(t(l)));
    out.alpha = r.alpha;
    if (j < n2) {
        std::swap(out.alpha[j - 1], out.alpha[j]);
    } else {
        // The swap crosses the lifted seam: positions 1 and 2n exchange their
        // lifted angles alpha~_0 and alpha~_{2n+1}, folded back by -+pi.
        out.alpha[0] = r.alpha[n2 - 1] - kPi;
        out.alpha[n2 - 1] = r.alpha[0] + kPi;
    }
    return out;
}

Region regular_region(int n) {
    if (n < 1) throw std::invalid_argument("regular_region: n must be positive");
    Region r;
    r.inv.tau.resize(2 * n);
    r.alpha.resize(2 * n);
    for (int j = 1; j <= 2 * n; ++j) {
        r.inv.tau[j - 1] = static_cast<int>(floor_mod(j + n - 1, 2 * n)) + 1;
        r.alpha[j - 1] = (j - 1) * kPi / (2 * n);
    }
    return r;
}

Region canonical_shape(const Involution& inv) {
    int n2 = inv.size();
    int n = n2 / 2;
    Region r;
    r.inv = inv;
    r.alpha.assign(n2, 0.0);
    int rank = 0;
    for (int j = 1; j <= n2; ++j) {
        int tj = inv.tau[j - 1];
        if (j < tj && tj <= n2) {
            ++rank;
            double mu = 0.5 * (j + tj);
            double base = (mu - 1.0) * kPi / (4 * n) + rank * kPi / (64.0 * n * n);
            r.alpha[j - 1] = base;
            r.alpha[tj - 1] = base + kPi / 2;
        }
    }
    auto v = validate(r);
    if (!v.empty()) {
        std::string msg = "canonical_shape: no strict ordering found:";
        for (const auto& s : v) msg += " " + s + ";";
        throw std::runtime_error(msg);
    }
    return r;
}

std::optional<std::array<int, 4>> alternation_witness(const Region& r, double tol) {
    int n2 = r.n2();
    for (int i = 1; i <= n2; ++i)
        for (int j = i + 1; j <= n2; ++j) {
            if (!direction_equal(r, i, j, true, tol)) continue;
            for (int k = j + 1; k <= n2; ++k) {
                if (!direction_equal(r, i, k, false, tol)) continue;
                for (int l = k + 1; l <= n2; ++l)
                    if (direction_equal(r, i, l, true, tol))
                        return std::array<int, 4>{i, j, k, l};
            }
        }
    return std::nullopt;
}

bool is_alternating(const Region& r) { return alternation_witness(r).has_value(); }

std::vector<int> supp(const Region& r, int p) {
    if (p < 1 || p > r.n2()) throw std::out_of_range("supp: index out of range");
    int tp = r.tau(p);
    std::vector<int> out;
    if (p < tp) {
        for (int j = p; j <= tp; ++j) out.push_back(j);
    } else {
        for (int j = p; j <= r.n2(); ++j) out.push_back(j);
        for (int j = 1; j <= tp; ++j) out.push_back(j);
    }
    return out;
}

int multiplicity(const Region& r, int p) {
    if (p < 1 || p > r.n2()) throw std::out_of_range("multiplicity: index out of range");
    int count = 0;
    for (int j : j_set(r, p))
        if (direction_equal(r, j, p, false, 1e-9)) ++count;
    return count;
}

namespace {

void involutions_rec(std::vector<int>& avail, std::vector<int>& tau,
                     std::vector<Involution>& out) {
    if (avail.empty()) {
        out.push_back(Involution{tau});
        return;
    }
    int a = avail.front();
    for (std::size_t i = 1; i < avail.size(); ++i) {
        int b = avail[i];
        std::vector<int> rest;
        for (std::size_t q = 1; q < avail.size(); ++q)
            if (q != i) rest.push_back(avail[q]);
        tau[a - 1] = b;
        tau[b - 1] = a;
        involutions_rec(rest, tau, out);
    }
}

void noncrossing_rec(const std::vector<int>& marks, std::vector<int>& tau,
                     std::mt19937& rng) {
    if (marks.empty()) return;
    int a = marks.front();
    // The partner must leave an even number of marks on each side.
    std::vector<int> choices;
    for (std::size_t i = 1; i < marks.size(); i += 2) choices.push_back(static_cast<int>(i));
    int pick = choices[uniform_int(rng, 0, static_cast<int>(choices.size()) - 1)];
    int b = marks[pick];
    tau[a - 1] = b;
    tau[b - 1] = a;
    std::vector<int> inside(marks.begin() + 1, marks.begin() + pick);
    std::vector<int> outside(marks.begin() + pick + 1, marks.end());
    noncrossing_rec(inside, tau, rng);
    noncrossing_rec(outside, tau, rng);
}

}  // namespace

std::vector<Involution> all_involutions(int n2) {
    std::vector<Involution> out;
    std::vector<int> avail(n2);
    for (int i = 0; i < n2; ++i) avail[i] = i + 1;
    std::vector<int> tau(n2, 0);
    involutions_rec(avail, tau, out);
    return out;
}

Involution random_involution(int n2, std::mt19937& rng) {
    std::vector<int> items(n2);
    for (int i = 0; i < n2; ++i) items[i] = i + 1;
    for (int i = n2 - 1; i > 0; --i) std::swap(items[i], items[uniform_int(rng, 0, i)]);
    Involution inv;
    inv.tau.assign(n2, 0);
    for (int i = 0; i < n2; i += 2) {
        inv.tau[items[i] - 1] = items[i + 1];
        inv.tau[items[i + 1] - 1] = items[i];
    }
    return inv;
}

Involution noncrossing_involution(int n2, std::mt19937& rng) {
    std::vector<int> marks(n2);
    for (int i = 0; i < n2; ++i) marks[i] = i + 1;
    Involution inv;
    inv.tau.assign(n2, 0);
    noncrossing_rec(marks, inv.tau, rng);
    return inv;
}

}  // namespace zising
