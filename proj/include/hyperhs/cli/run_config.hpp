#pragma once

#include "hyperhs/cli/output.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperhs::cli {

enum class Command {
    Classify,
    Lightcone,
    VerifyClosed,
    VerifyQuad,
    VerifyMc,
    BoundaryScan,
    SignAblation,
    DerivTest,
    GoeCheck,
    GoeCompare,
    CollisionTrace,
};

std::string to_string(Command c);
Command command_from_string(const std::string& name);
const std::vector<Command>& all_commands();
bool is_stochastic(Command c);

struct RunConfig {
    Command command = Command::Classify;
    int p = 1;
    int q = 1;
    std::vector<double> eps_schedule;
    std::size_t n_samples = 0;
    std::optional<std::uint64_t> seed;
    std::string engine;
    bool ablate_sign = false;
    double tol = 1e-9;
    unsigned threads = 0;
    std::string out_path;  // empty: stdout
    Format format = Format::Csv;
    bool check = false;    // turn verification failures into exit status 2
    nlohmann::json params = nlohmann::json::object();  // command-specific keys

    bool has(const std::string& key) const { return params.contains(key); }
    double number(const std::string& key, double fallback) const;
    int integer(const std::string& key, int fallback) const;
    // Matrix under `key`: either rows [[...]] (signature p, q of the config)
    // or an object {"p", "q", "rows"}.
    Eigen::MatrixXd matrix(const std::string& key) const;
    std::vector<Eigen::MatrixXd> matrices(const std::string& key) const;
};

// Reads the common keys (p, q, eps_schedule, n_samples, seed, engine,
// ablate_sign, tol, threads) from a JSON RunConfig; every other key stays in
// params. Throws InvalidArgument on malformed input.
RunConfig parse_run_config(Command command, const nlohmann::json& j);

// Seed present for stochastic commands, eps_schedule strictly decreasing,
// engine consistent with the command.
void validate(const RunConfig& cfg);

}  // namespace hyperhs::cli
