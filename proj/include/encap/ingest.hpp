#pragma once

#include "encap/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace encap {

// ---- Manifest CSV ---------------------------------------------------------
//
//   unit,region,violational
//   com.acme.Engine,com.acme,1
//
// UTF-8, LF on write, CRLF accepted on read. violational is one of
// 0/1/true/false (any case). Fields containing ',' or '"' are double-quoted.

inline constexpr std::string_view kManifestHeader = "unit,region,violational";

/// Throws ManifestError (row numbers count the header as row 1).
UnitGraph read_manifest(std::istream& in);
UnitGraph read_manifest_file(const std::filesystem::path& path);

/// Rows sorted by (region, unit id).
void write_manifest(const UnitGraph& g, std::ostream& out);
std::string write_manifest(const UnitGraph& g);

// ---- Java source trees ----------------------------------------------------

struct SkippedFile {
    std::string path;
    std::string reason;

    friend bool operator==(const SkippedFile&, const SkippedFile&) = default;
};

struct ScanDiagnostics {
    Count files_scanned = 0;
    Count units_found = 0;
    /// Sorted by path.
    std::vector<SkippedFile> files_skipped;
    std::vector<std::string> warnings;
};

struct ScanResult {
    UnitGraph graph;
    ScanDiagnostics diagnostics;
};

struct JavaTypeDecl {
    std::string name;
    bool is_public = false;

    friend bool operator==(const JavaTypeDecl&, const JavaTypeDecl&) = default;
};

struct JavaFileSummary {
    /// Empty for the unnamed package.
    std::string package;
    std::vector<JavaTypeDecl> types;
};

/// Region used for files without a package declaration.
inline constexpr std::string_view kDefaultPackage = "<default>";

/// Blanks out comments, string/text-block and char literals, keeping line
/// breaks. Throws InvalidInput on an unterminated comment or literal.
std::string strip_java_comments_and_literals(std::string_view source);

/// Package declaration and top-level class/interface/enum declarations of one
/// compilation unit. Nested and local types are not reported.
/// Throws InvalidInput when the file cannot be followed lexically.
JavaFileSummary scan_java_source(std::string_view source);

/// One unit per top-level type (id "package.Type"), region = package,
/// violational = declared public. package-info.java is ignored and files that
/// fail to scan are skipped with a diagnostic. Throws ScanError when the root
/// is unreadable or no units are found.
ScanResult scan_java_tree(const std::filesystem::path& root);

}  // namespace encap
