#pragma once

#include "hyperhs/opq/bsym.hpp"

#include <json.hpp>

namespace hyperhs::opq {

// {"p": int, "q": int, "rows": [[...], ...]}, row-major.
Eigen::MatrixXd matrix_from_rows(const nlohmann::json& rows);
nlohmann::json matrix_to_rows(const Eigen::MatrixXd& m);

SignatureMetric metric_from_json(const nlohmann::json& j);
BSymMatrix bsym_from_json(const nlohmann::json& j, double tol = 1e-12);
SourceMatrix source_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BSymMatrix& r);

}  // namespace hyperhs::opq
