#include "zising/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

#include "zising/elliptic.hpp"
#include "zising/rng.hpp"

namespace zising {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::optional<std::array<double, 2>> segment_intersection(
    const std::array<double, 2>& p1, const std::array<double, 2>& p2,
    const std::array<double, 2>& p3, const std::array<double, 2>& p4) {
    double d1x = p2[0] - p1[0], d1y = p2[1] - p1[1];
    double d2x = p4[0] - p3[0], d2y = p4[1] - p3[1];
    double den = d1x * d2y - d1y * d2x;
    if (std::abs(den) < 1e-15) return std::nullopt;
    double t = ((p3[0] - p1[0]) * d2y - (p3[1] - p1[1]) * d2x) / den;
    double u = ((p3[0] - p1[0]) * d1y - (p3[1] - p1[1]) * d1x) / den;
    if (t > 1e-12 && t < 1 - 1e-12 && u > 1e-12 && u < 1 - 1e-12)
        return std::array<double, 2>{p1[0] + t * d1x, p1[1] + t * d1y};
    return std::nullopt;
}

int chord_side(const ChordArrangement& a, int ci, const std::array<double, 2>& P) {
    auto [j, tj] = a.chords[ci];
    const auto& p1 = a.points[j - 1];
    const auto& p2 = a.points[tj - 1];
    double cr = (p2[0] - p1[0]) * (P[1] - p1[1]) - (p2[1] - p1[1]) * (P[0] - p1[0]);
    return cr > 0 ? 1 : -1;
}

std::vector<int> sign_vector(const ChordArrangement& a, const std::array<double, 2>& P) {
    std::vector<int> sv(a.chords.size());
    for (std::size_t ci = 0; ci < a.chords.size(); ++ci)
        sv[ci] = chord_side(a, static_cast<int>(ci), P);
    return sv;
}

double dist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

}  // namespace

ChordArrangement build_arrangement(const Region& r, int jitterSeed) {
    auto violations = validate(r);
    if (!violations.empty())
        throw std::invalid_argument("build_arrangement: invalid region: " + violations.front());
    int n2 = r.n2(), n = r.n();
    std::mt19937 rng(static_cast<std::uint32_t>(jitterSeed) ^ 0x9E3779B9u);
    for (int attempt = 0; attempt < 32; ++attempt) {
        ChordArrangement a;
        a.region = r;
        a.seed = jitterSeed;
        a.angles.resize(n2);
        a.points.resize(n2);
        for (int j = 1; j <= n2; ++j) {
            a.angles[j - 1] = kPi * (2 * j - 1) / n2 + uniform(rng, -0.01, 0.01);
            a.points[j - 1] = {std::cos(a.angles[j - 1]), std::sin(a.angles[j - 1])};
        }
        for (int j = 1; j <= n2; ++j)
            if (j < r.tau(j)) a.chords.emplace_back(j, r.tau(j));
        bool ok = true;
        for (int ci = 0; ci < n && ok; ++ci) {
            for (int cj = ci + 1; cj < n && ok; ++cj) {
                auto [a1, b1] = a.chords[ci];
                auto [a2, b2] = a.chords[cj];
                bool interleave = (a1 < a2 && a2 < b1 && b1 < b2) ||
                                  (a2 < a1 && a1 < b2 && b2 < b1);
                auto x = segment_intersection(a.points[a1 - 1], a.points[b1 - 1],
                                              a.points[a2 - 1], a.points[b2 - 1]);
                if (interleave != x.has_value()) { ok = false; break; }
                if (x) {
                    if ((*x)[0] * (*x)[0] + (*x)[1] * (*x)[1] > (1 - 1e-9) * (1 - 1e-9)) {
                        ok = false;
                        break;
                    }
                    a.crossings.push_back({ci, cj, *x});
                }
            }
        }
        if (ok) {
            for (std::size_t i = 0; i < a.crossings.size() && ok; ++i)
                for (std::size_t j = i + 1; j < a.crossings.size(); ++j)
                    if (dist(a.crossings[i].pos, a.crossings[j].pos) < 1e-9) { ok = false; break; }
        }
        if (ok) return a;
    }
    throw std::runtime_error("build_arrangement: genericity failure after 32 retries, seed " +
                             std::to_string(jitterSeed));
}

CellComplex enumerate_cells(const ChordArrangement& a) {
    const Region& r = a.region;
    int n2 = r.n2(), n = r.n();

    struct Sample {
        std::array<double, 2> point;
        int arc = 0;            // 1..2n for arc samples, else 0
        int crossing = -1;      // crossing index for quadrant samples
        int quadrant = -1;
    };
    std::vector<Sample> samples;
    for (int j = 1; j <= n2; ++j) {
        double a1 = a.angles[j - 1];
        double a2 = a.angles[j % n2] + (j == n2 ? 2 * kPi : 0.0);
        double amid = 0.5 * (a1 + a2);
        double rad = 1 - 1e-6;
        samples.push_back({{rad * std::cos(amid), rad * std::sin(amid)}, j, -1, -1});
    }
    double scale = 1.0;
    for (std::size_t i = 0; i < a.crossings.size(); ++i) {
        const auto& xi = a.crossings[i].pos;
        scale = std::min(scale, 1 - std::hypot(xi[0], xi[1]));
        for (std::size_t j = i + 1; j < a.crossings.size(); ++j)
            scale = std::min(scale, dist(xi, a.crossings[j].pos));
    }
    double eps = 1e-4 * scale;
    for (std::size_t c = 0; c < a.crossings.size(); ++c) {
        const auto& cr = a.crossings[c];
        auto [a1, b1] = a.chords[cr.ci];
        auto [a2, b2] = a.chords[cr.cj];
        int order[4] = {a1, a2, b1, b2};  // circular order of the rays (chords listed by ci < cj)
        std::array<std::array<double, 2>, 4> dirs;
        for (int q = 0; q < 4; ++q) {
            const auto& p = a.points[order[q] - 1];
            double vx = p[0] - cr.pos[0], vy = p[1] - cr.pos[1];
            double nv = std::hypot(vx, vy);
            dirs[q] = {vx / nv, vy / nv};
        }
        for (int q = 0; q < 4; ++q) {
            double wx = dirs[q][0] + dirs[(q + 1) % 4][0];
            double wy = dirs[q][1] + dirs[(q + 1) % 4][1];
            double nw = std::hypot(wx, wy);
            samples.push_back({{cr.pos[0] + eps * wx / nw, cr.pos[1] + eps * wy / nw},
                               0, static_cast<int>(c), q});
        }
    }

    std::map<std::vector<int>, std::array<double, 2>> cellPoints;
    for (const auto& s : samples) cellPoints.emplace(sign_vector(a, s.point), s.point);
    int expected = 1 + n + static_cast<int>(a.crossings.size());
    if (static_cast<int>(cellPoints.size()) != expected)
        throw std::runtime_error("enumerate_cells: degenerate geometry, found " +
                                 std::to_string(cellPoints.size()) + " cells, expected " +
                                 std::to_string(expected));

    CellComplex cx;
    std::map<std::vector<int>, int> cellIndex;
    for (const auto& [sv, pt] : cellPoints) {
        cellIndex[sv] = static_cast<int>(cx.cells.size());
        cx.cells.push_back({sv, false, pt});
    }
    cx.arcCell.assign(n2, -1);
    cx.quadCell.assign(a.crossings.size(), {-1, -1, -1, -1});
    for (const auto& s : samples) {
        int idx = cellIndex.at(sign_vector(a, s.point));
        if (s.arc > 0)
            cx.arcCell[s.arc - 1] = idx;
        else
            cx.quadCell[s.crossing][s.quadrant] = idx;
    }
    cx.refCell = cx.arcCell[0];
    const auto& ref = cx.cells[cx.refCell].signVector;
    for (auto& cell : cx.cells) {
        int ham = 0;
        for (std::size_t i = 0; i < ref.size(); ++i)
            if (cell.signVector[i] != ref[i]) ++ham;
        cell.black = (ham % 2 == 0);
    }
    return cx;
}

IsingGraph build_black_graph(const ChordArrangement& a, double m) {
    const Region& r = a.region;
    int n = r.n();
    CellComplex cx = enumerate_cells(a);

    IsingGraph g;
    g.m = m;
    g.numCells = static_cast<int>(cx.cells.size());
    std::vector<int> vertexOf(cx.cells.size(), -1);
    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
        if (cx.cells[i].black) {
            vertexOf[i] = g.numVertices++;
            g.vertexSign.push_back(cx.cells[i].signVector);
        }
    }

    for (std::size_t c = 0; c < a.crossings.size(); ++c) {
        const auto& cr = a.crossings[c];
        const auto& quads = cx.quadCell[c];
        bool cols[4];
        for (int q = 0; q < 4; ++q) cols[q] = cx.cells[quads[q]].black;
        bool alternating = (cols[0] && !cols[1] && cols[2] && !cols[3]) ||
                           (!cols[0] && cols[1] && !cols[2] && cols[3]);
        if (!alternating)
            throw std::runtime_error("build_black_graph: crossing quadrants are not 2 black + 2 white");
        auto [a1, b1] = a.chords[cr.ci];
        auto [a2, b2] = a.chords[cr.cj];
        int j, k, tj, tk;
        if (a1 < a2) { j = a1; k = a2; tj = b1; tk = b2; }
        else         { j = a2; k = a1; tj = b2; tk = b1; }
        if (!(j < k && k < tj && tj < tk))
            throw std::runtime_error("build_black_graph: chord pair does not interleave as expected");
        // Quadrant sector (j, k): counterclockwise from the ray toward d_j to
        // the ray toward d_k. The quadrant list was built on the circular
        // order [a1, a2, b1, b2].
        int order[4] = {a1, a2, b1, b2};
        int sector_jk = -1;
        for (int q = 0; q < 4; ++q) {
            int pr = order[q], nx = order[(q + 1) % 4];
            if (((pr == j && nx == k) || (pr == k && nx == j)) && pr == j) sector_jk = q;
        }
        if (sector_jk < 0)
            throw std::runtime_error("build_black_graph: sector (j,k) not found at crossing");
        // Half-angle case rule, fixed by calibration against the enumeration
        // oracle: if the black cells sit in the (j,k)/(tau(j),tau(k)) sector
        // pair, theta = alpha_{tau(j)} - alpha_k, otherwise alpha_k - alpha_j.
        bool blackjk = cols[sector_jk];
        double theta = blackjk ? r.alpha[tj - 1] - r.alpha[k - 1]
                               : r.alpha[k - 1] - r.alpha[j - 1];
        if (!(theta > 0 && theta < kPi / 2 + 1e-12))
            throw std::runtime_error("build_black_graph: half-angle outside (0, pi/2)");
        JacobiTriple tr = resc_sncndn(theta, m);
        double coupling = 0.5 * std::log((1 + tr.sn) / tr.cn);
        int uCell = blackjk ? quads[sector_jk] : quads[(sector_jk + 1) % 4];
        int vCell = blackjk ? quads[(sector_jk + 2) % 4] : quads[(sector_jk + 3) % 4];
        g.edges.push_back({vertexOf[uCell], vertexOf[vCell], static_cast<int>(c), theta, coupling});
    }

    for (int i = 1; i <= n; ++i) {
        int cell = cx.arcCell[2 * i - 2];
        if (!cx.cells[cell].black)
            throw std::runtime_error("build_black_graph: boundary arc cell is not black");
        g.boundary.push_back(vertexOf[cell]);
    }
    return g;
}

std::vector<std::vector<int>> crossing_order_signature(const ChordArrangement& a) {
    std::vector<std::vector<int>> sig(a.chords.size());
    for (std::size_t ci = 0; ci < a.chords.size(); ++ci) {
        const auto& p1 = a.points[a.chords[ci].first - 1];
        std::vector<std::pair<double, int>> along;
        for (const auto& cr : a.crossings) {
            if (cr.ci == static_cast<int>(ci) || cr.cj == static_cast<int>(ci)) {
                int other = (cr.ci == static_cast<int>(ci)) ? cr.cj : cr.ci;
                along.emplace_back(dist(p1, cr.pos), other);
            }
        }
        std::sort(along.begin(), along.end());
        for (const auto& [d, other] : along) sig[ci].push_back(other);
    }
    return sig;
}

}  // namespace zising
