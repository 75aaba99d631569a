#include "hyperhs/cli/output.hpp"
#include "hyperhs/cli/run_config.hpp"
#include "hyperhs/cli/runner.hpp"
#include "hyperhs/error.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hyperhs;
using namespace hyperhs::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPERHS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_config(const std::string& name, const json& j) {
    const fs::path dir = fs::temp_directory_path() / "hyperhs_cli_test";
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream(path) << j.dump();
    return path.string();
}

}  // namespace

TEST_CASE("classify prints the spectral summary") {
    const std::string cfg = write_config("classify.json", {{"p", 1}, {"q", 1}, {"R", {{2, 0}, {0, 0}}}});
    const Run r = run_cli("classify --config " + cfg + " --format json");
    REQUIRE(r.status == 0);
    const json j = parse_json_output(r.out);
    CHECK(j["status"] == "diagonalizable");
    CHECK(j["motif"] == "•◦");
    CHECK(j["sign"] == 1);
    CHECK(j["eigenvalues"] == json::array({2.0, 0.0}));
    CHECK(j["command"] == "classify");
}

TEST_CASE("verify-closed reproduces the closed form") {
    const std::string cfg = write_config("closed.json", {{"A", {{1, 0}, {0, -1}}}});
    const Run r = run_cli("verify-closed --config " + cfg + " --check");
    REQUIRE(r.status == 0);
    const ParsedCsv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 1);
    const double normalized = std::stod(csv.rows[0][csv.column("normalized_re")]);
    CHECK(normalized == doctest::Approx(std::pow(2.0, 1.5) * std::exp(-1.0)).epsilon(1e-12));
    CHECK(std::stod(csv.rows[0][csv.column("residual")]) < 1e-12);
    CHECK_FALSE(csv.seed);
}

TEST_CASE("boundary-scan rows") {
    const std::string cfg = write_config("boundary.json", {{"b", 1.0}, {"eps_schedule", {1.0, 0.5, 0.1, 0.05}}});
    const Run r = run_cli("boundary-scan --config " + cfg);
    REQUIRE(r.status == 0);
    const ParsedCsv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 4);
    const std::size_t col = csv.column("analytic");
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::stod(csv.rows[k][col]) < std::stod(csv.rows[k - 1][col]));
    for (const auto& row : csv.rows) CHECK(std::stod(row[csv.column("rel_discrepancy")]) < 1e-8);
}

TEST_CASE("input errors exit with status 1") {
    CHECK(run_cli("verify-mc").status == 1);  // no seed
    CHECK(run_cli("no-such-command").status == 1);
    CHECK(run_cli("classify --config /nonexistent/file.json").status == 1);
    const std::string bad = write_config("bad.json", {{"eps_schedule", {0.1, 0.2}}});
    CHECK(run_cli("verify-quad --config " + bad).status == 1);
    const std::string wrong = write_config("wrong.json", {{"command", "classify"}});
    CHECK(run_cli("verify-quad --config " + wrong).status == 1);
    const fs::path broken = fs::temp_directory_path() / "hyperhs_cli_test" / "broken.json";
    std::ofstream(broken) << "{ \"p\": ";
    CHECK(run_cli("classify --config " + broken.string()).status == 1);
    const std::string notsource = write_config("notsource.json", {{"A", {{1, 0}, {0, 1}}}});
    CHECK(run_cli("verify-closed --config " + notsource).status == 1);
}

TEST_CASE("verification failures exit with status 2 only under --check") {
    const std::string strict = write_config("strict.json", {{"max_rel_error", 0.001}});
    CHECK(run_cli("verify-quad --config " + strict + " --check").status == 2);
    CHECK(run_cli("verify-quad --config " + strict).status == 0);
    const std::string loose = write_config("loose.json", {{"max_rel_error", 0.5}});
    CHECK(run_cli("verify-quad --config " + loose + " --check").status == 0);
}

TEST_CASE("stochastic output is reproducible from its header seed") {
    const std::string cfg = write_config("mc.json", {{"n_samples", 20000}, {"seed", 314}});
    const Run first = run_cli("verify-mc --config " + cfg);
    REQUIRE(first.status == 0);
    const ParsedCsv csv = parse_csv(first.out);
    REQUIRE(csv.seed);
    CHECK(*csv.seed == 314);
    const std::string bare = write_config("mc_bare.json", {{"n_samples", 20000}});
    const Run again = run_cli("verify-mc --config " + bare + " --seed " + std::to_string(*csv.seed));
    CHECK(again.out == first.out);
    CHECK(run_cli("verify-mc --config " + bare + " --seed 315").out != first.out);
    const Run j = run_cli("verify-mc --config " + cfg + " --format json");
    CHECK(parse_json_output(j.out)["seed"] == 314);
}

TEST_CASE("--out writes the rendering to a file") {
    const std::string cfg = write_config("lc.json", {{"R", {{2, 1}, {-1, 0}}}});
    const fs::path out = fs::temp_directory_path() / "hyperhs_cli_test" / "lc.csv";
    fs::remove(out);
    const Run r = run_cli("lightcone --config " + cfg + " --out " + out.string());
    REQUIRE(r.status == 0);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    const ParsedCsv csv = parse_csv(ss.str());
    CHECK(csv.rows.at(0)[csv.column("domain")] == "boundary");
    CHECK(std::stod(csv.rows[0][csv.column("xi")]) == 0.0);
}

TEST_CASE("collision-trace finds the crossing") {
    const std::string cfg =
        write_config("collision.json", {{"R0", {{2, 0}, {0, 0}}}, {"R1", {{1, 2}, {-2, 1}}}, {"steps", 30}});
    const Run r = run_cli("collision-trace --config " + cfg + " --format json");
    REQUIRE(r.status == 0);
    const json j = parse_json_output(r.out);
    CHECK(std::abs(j["refined_t"].get<double>() - 1.0 / 3.0) < 1e-6);
}

TEST_CASE("rendered documents carry a version and parse back") {
    OutputDoc doc;
    doc.command = "demo";
    doc.seed = 9;
    doc.columns = {"x", "label", "n"};
    doc.add_row({0.1 + 0.2, std::string("a"), std::int64_t{-3}});
    const ParsedCsv csv = parse_csv(render_csv(doc));
    CHECK(csv.version == format_version());
    CHECK(csv.command == "demo");
    CHECK(*csv.seed == 9);
    CHECK(std::stod(csv.rows[0][0]) == 0.1 + 0.2);
    CHECK(csv.rows[0][2] == "-3");
    const json j = parse_json_output(render_json(doc).dump());
    CHECK(j["rows"][0][0].get<double>() == 0.1 + 0.2);
    CHECK_THROWS_AS(doc.add_row({1.0}), Error);
}

TEST_CASE("unknown major versions are rejected") {
    CHECK_NOTHROW(check_format_version("1.0"));
    CHECK_NOTHROW(check_format_version("1.7"));
    CHECK_THROWS_AS(check_format_version("2.0"), InvalidArgument);
    CHECK_THROWS_AS(check_format_version(""), InvalidArgument);
    CHECK_THROWS_AS(parse_csv("# hyperhs format_version=2.0 command=x\na\n1\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_csv("a,b\n1,2\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_json_output(R"({"format_version":"3.1","rows":[]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_json_output(R"({"rows":[]})"), InvalidArgument);
}

TEST_CASE("run configuration validation") {
    CHECK_THROWS_AS(validate(parse_run_config(Command::VerifyMc, json::object())), InvalidArgument);
    CHECK_NOTHROW(validate(parse_run_config(Command::VerifyMc, {{"seed", 1}})));
    CHECK_THROWS_AS(validate(parse_run_config(Command::VerifyQuad, {{"eps_schedule", {0.1, 0.1}}})),
                    InvalidArgument);
    CHECK_THROWS_AS(parse_run_config(Command::Classify, {{"seed", -4}}), InvalidArgument);
    CHECK_THROWS_AS(parse_run_config(Command::Classify, {{"n_samples", 0}}), InvalidArgument);
    const RunConfig c = parse_run_config(Command::Classify, {{"p", 2}, {"q", 1}});
    CHECK(c.p == 2);
    CHECK(command_from_string("goe-compare") == Command::GoeCompare);
    CHECK(is_stochastic(Command::GoeCheck));
    CHECK_FALSE(is_stochastic(Command::BoundaryScan));
}
