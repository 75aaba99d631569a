#include "hyperhs/cli/output.hpp"

#include "hyperhs/error.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace hyperhs::cli {

std::string format_version() { return std::to_string(kFormatMajor) + "." + std::to_string(kFormatMinor); }

Format format_from_string(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw InvalidArgument("unknown output format '" + name + "'");
}

void OutputDoc::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw Error("output row width does not match header");
    rows.push_back(std::move(row));
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return format_double(v);
            else if constexpr (std::is_same_v<T, std::string>)
                return v;
            else
                return std::to_string(v);
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::json cell_json(const Cell& c) {
    return std::visit([](const auto& v) { return nlohmann::json(v); }, c);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

}  // namespace

std::string render_csv(const OutputDoc& doc) {
    std::ostringstream os;
    os << "# hyperhs format_version=" << format_version() << " command=" << doc.command;
    if (doc.seed) os << " seed=" << *doc.seed;
    os << "\n";
    for (std::size_t k = 0; k < doc.columns.size(); ++k) os << (k ? "," : "") << csv_escape(doc.columns[k]);
    os << "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_escape(cell_text(row[k]));
        os << "\n";
    }
    return os.str();
}

nlohmann::json render_json(const OutputDoc& doc) {
    nlohmann::json j = doc.extra;
    j["format_version"] = format_version();
    j["command"] = doc.command;
    if (doc.seed) j["seed"] = *doc.seed;
    j["columns"] = doc.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : doc.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) r.push_back(cell_json(c));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string render(const OutputDoc& doc, Format f) {
    return f == Format::Csv ? render_csv(doc) : render_json(doc).dump(2) + "\n";
}

void check_format_version(const std::string& version) {
    const auto dot = version.find('.');
    int major = -1;
    const char* first = version.data();
    const char* last = version.data() + (dot == std::string::npos ? version.size() : dot);
    const auto [ptr, ec] = std::from_chars(first, last, major);
    if (version.empty() || ec != std::errc() || ptr != last)
        throw InvalidArgument("malformed format version '" + version + "'");
    if (major != kFormatMajor)
        throw InvalidArgument("unsupported format major version " + std::to_string(major));
}

std::size_t ParsedCsv::column(const std::string& name) const {
    for (std::size_t k = 0; k < columns.size(); ++k)
        if (columns[k] == name) return k;
    throw InvalidArgument("no column '" + name + "'");
}

ParsedCsv parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("# hyperhs ", 0) != 0)
        throw InvalidArgument("missing hyperhs CSV header line");
    ParsedCsv out;
    std::istringstream meta(line.substr(10));
    std::string field;
    while (meta >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "format_version") out.version = value;
        else if (key == "command") out.command = value;
        else if (key == "seed") out.seed = std::stoull(value);
    }
    check_format_version(out.version);
    if (!std::getline(is, line)) throw InvalidArgument("missing CSV column header");
    out.columns = split_csv_line(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.rows.push_back(split_csv_line(line));
        if (out.rows.back().size() != out.columns.size()) throw InvalidArgument("CSV row width mismatch");
    }
    return out;
}

nlohmann::json parse_json_output(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("format_version") || !j["format_version"].is_string())
        throw InvalidArgument("output has no format_version");
    check_format_version(j["format_version"].get<std::string>());
    return j;
}

}  // namespace hyperhs::cli
