#include "hyperhs/cli/runner.hpp"
#include "hyperhs/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace hyperhs;

namespace {

std::string describe(cli::Command c) {
    switch (c) {
        case cli::Command::Classify: return "spectral classification and motif of a B-symmetric R";
        case cli::Command::Lightcone: return "light-cone coordinates of a 2x2 R";
        case cli::Command::VerifyClosed: return "closed-form (1,1) integral against its target";
        case cli::Command::VerifyQuad: return "light-cone quadrature over an eps schedule";
        case cli::Command::VerifyMc: return "importance-sampled integral, compared with quadrature at (1,1)";
        case cli::Command::BoundaryScan: return "boundary eta integral, numeric against analytic";
        case cli::Command::SignAblation: return "compensated values with and without the domain sign";
        case cli::Command::DerivTest: return "directional derivatives of the compensated value";
        case cli::Command::GoeCheck: return "GOE Fourier transform against its closed form";
        case cli::Command::GoeCompare: return "sigma-model and GOE ratios of F(z)";
        case cli::Command::CollisionTrace: return "classification along a straight path R0 -> R1";
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks of the hyperbolic Hubbard-Stratonovich identity"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
    bool check = false;

    for (cli::Command c : cli::all_commands()) {
        CLI::App* sub = app.add_subcommand(cli::to_string(c), describe(c));
        sub->add_option("--config", config_path, "JSON run configuration");
        sub->add_option("--seed", seed, "master seed (overrides the config)");
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--check", check, "exit with status 2 when a verification check fails");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitInputError;
    }

    const CLI::App* sub = app.get_subcommands().front();
    try {
        nlohmann::json j = nlohmann::json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw InvalidArgument("cannot read config file " + config_path);
            j = nlohmann::json::parse(in);
        }
        cli::RunConfig cfg = cli::parse_run_config(cli::command_from_string(sub->get_name()), j);
        if (sub->count("--seed")) cfg.seed = seed;
        cfg.out_path = out_path;
        cfg.format = cli::format_from_string(format);
        cfg.check = check;
        return cli::run(cfg, std::cout, std::cerr);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed configuration: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return cli::kExitInputError;
}
