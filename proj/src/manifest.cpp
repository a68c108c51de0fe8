#include "encap/error.hpp"
#include "encap/ingest.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

namespace encap {

namespace {

[[noreturn]] void fail(std::size_t row, std::string field, std::string_view detail) {
    auto what = fmt::format("manifest row {}, field '{}': {}", row, field, detail);
    throw ManifestError(row, std::move(field), what);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

// RFC 4180 style fields on a single line.
std::vector<std::string> split_fields(const std::string& line, std::size_t row) {
    std::vector<std::string> fields;
    std::string current;
    std::size_t i = 0;
    bool field_start = true;
    while (true) {
        if (field_start && i < line.size() && line[i] == '"') {
            ++i;
            while (true) {
                if (i >= line.size()) fail(row, "row", "unterminated quoted field");
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        current += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                current += line[i++];
            }
            if (i < line.size() && line[i] != ',') fail(row, "row", "text after closing quote");
        }
        if (i >= line.size()) {
            fields.push_back(std::move(current));
            break;
        }
        if (line[i] == ',') {
            fields.push_back(std::move(current));
            current.clear();
            field_start = true;
            ++i;
            continue;
        }
        current += line[i++];
        field_start = false;
    }
    return fields;
}

bool parse_flag(std::string text, std::size_t row) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (text == "1" || text == "true") return true;
    if (text == "0" || text == "false") return false;
    fail(row, "violational", fmt::format("expected 0, 1, true or false, got '{}'", text));
}

void write_field(std::ostream& out, const std::string& field) {
    if (field.find_first_of(",\"") == std::string::npos) {
        out << field;
        return;
    }
    out << '"';
    for (char c : field) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

UnitGraph read_manifest(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) fail(1, "header", "empty file");
    if (lines.front() != kManifestHeader) {
        fail(1, "header", fmt::format("expected '{}'", kManifestHeader));
    }

    std::vector<Unit> units;
    std::unordered_set<std::string> ids;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t row = i + 1;
        if (lines[i].empty()) {
            if (i + 1 == lines.size()) break;
            fail(row, "row", "blank row");
        }
        std::vector<std::string> fields = split_fields(lines[i], row);
        if (fields.size() != 3) fail(row, "row", fmt::format("expected 3 fields, got {}", fields.size()));
        if (fields[0].empty()) fail(row, "unit", "empty unit id");
        if (fields[1].empty()) fail(row, "region", "empty region");
        const bool flag = parse_flag(fields[2], row);
        if (!ids.insert(fields[0]).second) fail(row, "unit", fmt::format("duplicate unit id '{}'", fields[0]));
        units.push_back({std::move(fields[0]), std::move(fields[1]), flag});
    }
    if (units.empty()) fail(2, "unit", "empty system");
    return UnitGraph(std::move(units));
}

UnitGraph read_manifest_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput(fmt::format("cannot open manifest '{}'", path.string()));
    return read_manifest(in);
}

void write_manifest(const UnitGraph& g, std::ostream& out) {
    out << kManifestHeader << '\n';
    for (const Unit& u : g.sorted_units()) {
        write_field(out, u.id);
        out << ',';
        write_field(out, u.region);
        out << ',' << (u.violational ? '1' : '0') << '\n';
    }
}

std::string write_manifest(const UnitGraph& g) {
    std::ostringstream out;
    write_manifest(g, out);
    return out.str();
}

}  // namespace encap
