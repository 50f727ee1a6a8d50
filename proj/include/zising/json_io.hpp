#pragma once

#include <Eigen/Dense>
#include <string>

#include <json.hpp>

#include "zising/arrangement.hpp"
#include "zising/region.hpp"

namespace zising {

// Accepted schema: {"n": int, "tau": [int; 2n] (1-based), "alpha": [float; 2n]}.
// "alpha" may be omitted; canonical_shape supplies angles then. Schema
// violations throw std::invalid_argument (the region's own validity is a
// separate question, left to validate()).
Region region_from_json(const nlohmann::json& j);

nlohmann::json region_to_json(const Region& r);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);

// Row-major CSV with header b_1..b_n; 17 significant digits.
std::string matrix_to_csv(const Eigen::MatrixXd& m);

nlohmann::json graph_to_json(const ChordArrangement& a, const CellComplex& cc,
                             const IsingGraph& g);

}  // namespace zising
