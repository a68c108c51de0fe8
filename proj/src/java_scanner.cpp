#include "encap/error.hpp"
#include "encap/ingest.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <system_error>

namespace encap {

namespace {

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || std::isdigit(c); }

struct Token {
    std::string text;
    bool identifier = false;
    std::size_t line = 0;
};

std::vector<Token> tokenize(std::string_view code) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < code.size()) {
        const auto c = static_cast<unsigned char>(code[i]);
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(c)) {
            ++i;
        } else if (is_ident_start(c)) {
            std::size_t end = i + 1;
            while (end < code.size() && is_ident_part(static_cast<unsigned char>(code[end]))) ++end;
            tokens.push_back({std::string(code.substr(i, end - i)), true, line});
            i = end;
        } else if (std::isdigit(c)) {
            // Numeric literals never matter here; swallow digits, letters and dots.
            while (i < code.size() && (is_ident_part(static_cast<unsigned char>(code[i])) || code[i] == '.')) ++i;
        } else {
            tokens.push_back({std::string(1, code[i]), false, line});
            ++i;
        }
    }
    return tokens;
}

bool is_type_keyword(const std::string& s) {
    return s == "class" || s == "interface" || s == "enum";
}

}  // namespace

std::string strip_java_comments_and_literals(std::string_view source) {
    std::string out(source);
    std::size_t i = 0;
    std::size_t line = 1;
    auto blank = [&](std::size_t from, std::size_t to) {
        for (std::size_t k = from; k < to; ++k) {
            if (out[k] != '\n') out[k] = ' ';
        }
    };
    while (i < source.size()) {
        const char c = source[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (source.compare(i, 2, "//") == 0) {
            std::size_t end = source.find('\n', i);
            if (end == std::string_view::npos) end = source.size();
            blank(i, end);
            i = end;
        } else if (source.compare(i, 2, "/*") == 0) {
            const std::size_t end = source.find("*/", i + 2);
            if (end == std::string_view::npos) {
                throw InvalidInput(fmt::format("line {}: unterminated block comment", line));
            }
            line += static_cast<std::size_t>(std::count(source.begin() + i, source.begin() + end, '\n'));
            blank(i, end + 2);
            i = end + 2;
        } else if (source.compare(i, 3, "\"\"\"") == 0) {
            std::size_t k = i + 3;
            while (k < source.size() && source.compare(k, 3, "\"\"\"") != 0) {
                k += source[k] == '\\' ? 2 : 1;
            }
            if (k >= source.size()) throw InvalidInput(fmt::format("line {}: unterminated text block", line));
            line += static_cast<std::size_t>(std::count(source.begin() + i, source.begin() + k, '\n'));
            blank(i, k + 3);
            i = k + 3;
        } else if (c == '"' || c == '\'') {
            std::size_t k = i + 1;
            while (k < source.size() && source[k] != c && source[k] != '\n') {
                k += source[k] == '\\' ? 2 : 1;
            }
            if (k >= source.size() || source[k] != c) {
                throw InvalidInput(fmt::format("line {}: unterminated {} literal", line,
                                               c == '"' ? "string" : "char"));
            }
            blank(i, k + 1);
            i = k + 1;
        } else {
            ++i;
        }
    }
    return out;
}

JavaFileSummary scan_java_source(std::string_view source) {
    const std::vector<Token> tokens = tokenize(strip_java_comments_and_literals(source));
    JavaFileSummary summary;
    bool have_package = false;
    int braces = 0;
    int parens = 0;
    // Modifiers and annotations seen at the top level since the last declaration boundary.
    std::vector<std::string> header;

    auto skip_to_semicolon = [&](std::size_t& i, std::string* collect) {
        const std::size_t start_line = tokens[i].line;
        for (++i; i < tokens.size() && tokens[i].text != ";"; ++i) {
            if (collect) *collect += tokens[i].text;
        }
        if (i >= tokens.size()) {
            throw InvalidInput(fmt::format("line {}: missing ';'", start_line));
        }
    };

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.text == "{") {
            ++braces;
            continue;
        }
        if (t.text == "}") {
            if (--braces < 0) throw InvalidInput(fmt::format("line {}: unbalanced '}}'", t.line));
            if (braces == 0) header.clear();
            continue;
        }
        if (braces > 0) continue;

        if (t.text == "(") {
            ++parens;
            continue;
        }
        if (t.text == ")") {
            if (--parens < 0) throw InvalidInput(fmt::format("line {}: unbalanced ')'", t.line));
            continue;
        }
        if (parens > 0) continue;

        if (t.text == ";") {
            header.clear();
            continue;
        }
        if (!t.identifier) {
            header.push_back(t.text);
            continue;
        }
        if (t.text == "package" && header.empty()) {
            if (have_package) throw InvalidInput(fmt::format("line {}: second package declaration", t.line));
            skip_to_semicolon(i, &summary.package);
            if (summary.package.empty()) throw InvalidInput(fmt::format("line {}: empty package name", t.line));
            have_package = true;
            continue;
        }
        if (t.text == "import" && header.empty()) {
            skip_to_semicolon(i, nullptr);
            continue;
        }
        const bool member_access = !header.empty() && header.back() == ".";
        if (is_type_keyword(t.text) && !member_access) {
            if (i + 1 >= tokens.size() || !tokens[i + 1].identifier) {
                throw InvalidInput(fmt::format("line {}: '{}' without a type name", t.line, t.text));
            }
            const bool is_public = std::find(header.begin(), header.end(), "public") != header.end();
            summary.types.push_back({tokens[i + 1].text, is_public});
            ++i;
            header.clear();
            continue;
        }
        header.push_back(t.text);
    }
    if (braces != 0) throw InvalidInput("unbalanced braces at end of file");
    if (parens != 0) throw InvalidInput("unbalanced parentheses at end of file");
    return summary;
}

ScanResult scan_java_tree(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw ScanError(fmt::format("cannot read source root '{}'", root.string()));
    }

    std::vector<fs::path> files;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw ScanError(fmt::format("cannot read source root '{}': {}", root.string(), ec.message()));
    for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
        if (ec) throw ScanError(fmt::format("error walking '{}': {}", root.string(), ec.message()));
        const fs::directory_entry& entry = *it;
        if (!entry.is_regular_file(ec) || entry.path().extension() != ".java") continue;
        if (entry.path().filename() == "package-info.java") continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
        return a.lexically_relative(root).generic_string() < b.lexically_relative(root).generic_string();
    });

    ScanDiagnostics diag;
    std::map<std::string, Unit> units;
    for (const fs::path& file : files) {
        const std::string rel = file.lexically_relative(root).generic_string();
        ++diag.files_scanned;
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            diag.files_skipped.push_back({rel, "unreadable"});
            continue;
        }
        const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        JavaFileSummary summary;
        try {
            summary = scan_java_source(text);
        } catch (const InvalidInput& e) {
            diag.files_skipped.push_back({rel, e.what()});
            continue;
        }
        const std::string region = summary.package.empty() ? std::string(kDefaultPackage) : summary.package;
        for (const JavaTypeDecl& type : summary.types) {
            std::string id = summary.package.empty() ? type.name : summary.package + "." + type.name;
            if (units.contains(id)) {
                diag.warnings.push_back(fmt::format("{}: duplicate type '{}' ignored", rel, id));
                continue;
            }
            units.emplace(id, Unit{id, region, type.is_public});
        }
    }

    if (units.empty()) throw ScanError(fmt::format("empty system: no Java types under '{}'", root.string()));
    std::vector<Unit> ordered;
    ordered.reserve(units.size());
    for (auto& [id, unit] : units) ordered.push_back(std::move(unit));
    diag.units_found = ordered.size();
    return {UnitGraph(std::move(ordered)), std::move(diag)};
}

}  // namespace encap
