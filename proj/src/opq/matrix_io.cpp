#include "hyperhs/opq/matrix_io.hpp"

#include "hyperhs/error.hpp"

namespace hyperhs::opq {

Eigen::MatrixXd matrix_from_rows(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.empty()) throw InvalidArgument("matrix rows must be a non-empty array");
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = rows[0].is_array() ? rows[0].size() : 0;
    if (n_cols == 0) throw InvalidArgument("matrix rows must be arrays of numbers");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols));
    for (std::size_t i = 0; i < n_rows; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n_cols) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < n_cols; ++j) {
            if (!rows[i][j].is_number()) throw InvalidArgument("matrix entries must be numbers");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j].get<double>();
        }
    }
    return m;
}

nlohmann::json matrix_to_rows(const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

SignatureMetric metric_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j["p"].is_number_integer() ||
        !j["q"].is_number_integer())
        throw InvalidArgument("expected integer fields \"p\" and \"q\"");
    return make_metric(j["p"].get<int>(), j["q"].get<int>());
}

namespace {

Eigen::MatrixXd checked_rows(const nlohmann::json& j, const SignatureMetric& m) {
    if (!j.contains("rows")) throw InvalidArgument("expected field \"rows\"");
    Eigen::MatrixXd r = matrix_from_rows(j["rows"]);
    if (r.rows() != m.n() || r.cols() != m.n()) throw DimensionMismatch("matrix size does not match p + q");
    return r;
}

}  // namespace

BSymMatrix bsym_from_json(const nlohmann::json& j, double tol) {
    const SignatureMetric m = metric_from_json(j);
    return BSymMatrix::from_matrix(m, checked_rows(j, m), tol);
}

SourceMatrix source_from_json(const nlohmann::json& j) {
    const SignatureMetric m = metric_from_json(j);
    return make_source(m, checked_rows(j, m));
}

nlohmann::json to_json(const BSymMatrix& r) {
    return {{"p", r.metric().p()}, {"q", r.metric().q()}, {"rows", matrix_to_rows(r.matrix())}};
}

}  // namespace hyperhs::opq
