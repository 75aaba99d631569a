#include "hyperhs/cli/run_config.hpp"

#include "hyperhs/error.hpp"
#include "hyperhs/hs/convention.hpp"
#include "hyperhs/opq/matrix_io.hpp"

#include <array>

namespace hyperhs::cli {

namespace {

struct CommandName {
    Command command;
    const char* name;
    bool stochastic;
};

constexpr std::array<CommandName, 11> kCommands{{
    {Command::Classify, "classify", false},
    {Command::Lightcone, "lightcone", false},
    {Command::VerifyClosed, "verify-closed", false},
    {Command::VerifyQuad, "verify-quad", false},
    {Command::VerifyMc, "verify-mc", true},
    {Command::BoundaryScan, "boundary-scan", false},
    {Command::SignAblation, "sign-ablation", true},
    {Command::DerivTest, "deriv-test", true},
    {Command::GoeCheck, "goe-check", true},
    {Command::GoeCompare, "goe-compare", true},
    {Command::CollisionTrace, "collision-trace", false},
}};

const CommandName& entry(Command c) {
    for (const auto& e : kCommands)
        if (e.command == c) return e;
    throw Error("unknown command");
}

template <class T>
T get_typed(const nlohmann::json& j, const std::string& key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("config key '" + key + "': " + e.what());
    }
}

}  // namespace

std::string to_string(Command c) { return entry(c).name; }

Command command_from_string(const std::string& name) {
    for (const auto& e : kCommands)
        if (name == e.name) return e.command;
    throw InvalidArgument("unknown command '" + name + "'");
}

const std::vector<Command>& all_commands() {
    static const std::vector<Command> out = [] {
        std::vector<Command> v;
        for (const auto& e : kCommands) v.push_back(e.command);
        return v;
    }();
    return out;
}

bool is_stochastic(Command c) { return entry(c).stochastic; }

double RunConfig::number(const std::string& key, double fallback) const {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_number()) throw InvalidArgument("config key '" + key + "' must be a number");
    return params[key].get<double>();
}

int RunConfig::integer(const std::string& key, int fallback) const {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_number_integer()) throw InvalidArgument("config key '" + key + "' must be an integer");
    return params[key].get<int>();
}

namespace {

Eigen::MatrixXd matrix_value(const nlohmann::json& v, int p, int q) {
    if (v.is_object()) {
        const opq::SignatureMetric m = opq::metric_from_json(v);
        if (m.p() != p || m.q() != q) throw DimensionMismatch("matrix signature differs from config p, q");
        Eigen::MatrixXd r = opq::matrix_from_rows(v.at("rows"));
        if (r.rows() != m.n() || r.cols() != m.n()) throw DimensionMismatch("matrix size does not match p + q");
        return r;
    }
    Eigen::MatrixXd r = opq::matrix_from_rows(v);
    if (r.rows() != p + q || r.cols() != p + q) throw DimensionMismatch("matrix size does not match p + q");
    return r;
}

}  // namespace

Eigen::MatrixXd RunConfig::matrix(const std::string& key) const {
    if (!params.contains(key)) throw InvalidArgument("config is missing matrix '" + key + "'");
    return matrix_value(params[key], p, q);
}

std::vector<Eigen::MatrixXd> RunConfig::matrices(const std::string& key) const {
    if (!params.contains(key)) throw InvalidArgument("config is missing matrix list '" + key + "'");
    const nlohmann::json& v = params[key];
    if (!v.is_array() || v.empty()) throw InvalidArgument("config key '" + key + "' must be a non-empty list");
    std::vector<Eigen::MatrixXd> out;
    for (const auto& item : v) out.push_back(matrix_value(item, p, q));
    return out;
}

RunConfig parse_run_config(Command command, const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidArgument("run configuration must be a JSON object");
    RunConfig cfg;
    cfg.command = command;
    cfg.params = j;
    if (j.contains("command") && get_typed<std::string>(j, "command") != to_string(command))
        throw InvalidArgument("config command '" + j["command"].get<std::string>() + "' does not match '" +
                              to_string(command) + "'");
    if (j.contains("p")) cfg.p = get_typed<int>(j, "p");
    if (j.contains("q")) cfg.q = get_typed<int>(j, "q");
    if (j.contains("eps_schedule")) cfg.eps_schedule = get_typed<std::vector<double>>(j, "eps_schedule");
    if (j.contains("n_samples")) {
        const auto n = get_typed<long long>(j, "n_samples");
        if (n < 1) throw InvalidArgument("n_samples must be positive");
        cfg.n_samples = static_cast<std::size_t>(n);
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0))
            throw InvalidArgument("seed must be a non-negative integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("engine")) cfg.engine = get_typed<std::string>(j, "engine");
    if (j.contains("ablate_sign")) cfg.ablate_sign = get_typed<bool>(j, "ablate_sign");
    if (j.contains("tol")) cfg.tol = get_typed<double>(j, "tol");
    if (j.contains("threads")) cfg.threads = get_typed<unsigned>(j, "threads");
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (cfg.p < 0 || cfg.q < 0) throw InvalidArgument("p and q must be non-negative");
    if (is_stochastic(cfg.command) && !cfg.seed)
        throw InvalidArgument("command '" + to_string(cfg.command) + "' is stochastic and needs a seed");
    if (!cfg.eps_schedule.empty()) hs::EpsilonSchedule schedule(cfg.eps_schedule);
    if (!(cfg.tol > 0.0)) throw InvalidArgument("tol must be positive");
    if (!cfg.engine.empty()) {
        if (cfg.engine != "closed" && cfg.engine != "quad" && cfg.engine != "mc")
            throw InvalidArgument("engine must be closed, quad or mc");
        const std::string expected = cfg.command == Command::VerifyClosed ? "closed"
                                     : cfg.command == Command::VerifyQuad ? "quad"
                                     : cfg.command == Command::VerifyMc   ? "mc"
                                                                          : cfg.engine;
        if (cfg.engine != expected)
            throw InvalidArgument("engine '" + cfg.engine + "' does not match command " + to_string(cfg.command));
    }
}

}  // namespace hyperhs::cli
