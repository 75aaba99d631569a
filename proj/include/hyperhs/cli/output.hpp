#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hyperhs::cli {

inline constexpr int kFormatMajor = 1;
inline constexpr int kFormatMinor = 0;
std::string format_version();

enum class Format { Csv, Json };
Format format_from_string(const std::string& name);

using Cell = std::variant<double, std::int64_t, std::uint64_t, std::string>;

// One result table plus command metadata. Every rendering carries the format
// version and, for stochastic commands, the master seed.
struct OutputDoc {
    std::string command;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::json extra = nlohmann::json::object();  // JSON-only fields

    void add_row(std::vector<Cell> row);
};

// First line "# hyperhs format_version=1.0 command=<c> [seed=<s>]", then a
// header row; doubles use 17 significant digits so values round-trip.
std::string render_csv(const OutputDoc& doc);
nlohmann::json render_json(const OutputDoc& doc);
std::string render(const OutputDoc& doc, Format f);

// Throws InvalidArgument for a missing or unsupported major version.
void check_format_version(const std::string& version);

struct ParsedCsv {
    std::string version;
    std::string command;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const;
};

ParsedCsv parse_csv(const std::string& text);
// Validates the version of a JSON rendering.
nlohmann::json parse_json_output(const std::string& text);

std::string format_double(double x);

}  // namespace hyperhs::cli
