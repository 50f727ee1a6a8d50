#include "zising/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace zising {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("region schema: " + what);
}

}  // namespace

Region region_from_json(const nlohmann::json& j) {
    require(j.is_object(), "top level must be an object");
    require(j.contains("n") && j["n"].is_number_integer(), "\"n\" must be an integer");
    int n = j["n"].get<int>();
    require(n >= 1, "\"n\" must be positive");
    require(j.contains("tau") && j["tau"].is_array(), "\"tau\" must be an array");
    require(j["tau"].size() == static_cast<std::size_t>(2 * n), "\"tau\" must have 2n entries");
    Region r;
    for (const auto& v : j["tau"]) {
        require(v.is_number_integer(), "\"tau\" entries must be integers");
        r.inv.tau.push_back(v.get<int>());
    }
    if (j.contains("alpha")) {
        require(j["alpha"].is_array() && j["alpha"].size() == static_cast<std::size_t>(2 * n),
                "\"alpha\" must have 2n entries");
        for (const auto& v : j["alpha"]) {
            require(v.is_number(), "\"alpha\" entries must be numbers");
            r.alpha.push_back(v.get<double>());
        }
        return r;
    }
    for (int k = 1; k <= 2 * n; ++k) {
        int t = r.inv.tau[k - 1];
        require(t >= 1 && t <= 2 * n && t != k && r.inv.tau[t - 1] == k,
                "\"tau\" must be a fixed-point-free involution when \"alpha\" is absent");
    }
    return canonical_shape(r.inv);
}

nlohmann::json region_to_json(const Region& r) {
    return {{"n", r.n()}, {"tau", r.inv.tau}, {"alpha", r.alpha}};
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_to_csv(const Eigen::MatrixXd& m) {
    std::string out;
    for (int j = 0; j < m.cols(); ++j)
        out += (j ? ",b_" : "b_") + std::to_string(j + 1);
    out += "\n";
    char buf[64];
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            if (j) out += ",";
            out += buf;
        }
        out += "\n";
    }
    return out;
}

nlohmann::json graph_to_json(const ChordArrangement& a, const CellComplex& cc,
                             const IsingGraph& g) {
    nlohmann::json out;
    out["endpoint_angles"] = a.angles;
    nlohmann::json chords = nlohmann::json::array();
    for (auto [u, v] : a.chords) chords.push_back({u, v});
    out["chords"] = chords;
    nlohmann::json crossings = nlohmann::json::array();
    for (const auto& c : a.crossings)
        crossings.push_back({{"chords", {c.ci, c.cj}}, {"point", {c.pos[0], c.pos[1]}}});
    out["crossings"] = crossings;
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : cc.cells)
        cells.push_back({{"signs", c.signVector},
                         {"black", c.black},
                         {"point", {c.point[0], c.point[1]}}});
    out["cells"] = cells;
    out["num_vertices"] = g.numVertices;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"u", e.u},
                         {"v", e.v},
                         {"crossing", e.crossing},
                         {"theta", e.theta},
                         {"coupling", e.coupling}});
    out["edges"] = edges;
    out["boundary_vertices"] = g.boundary;
    return out;
}

}  // namespace zising
