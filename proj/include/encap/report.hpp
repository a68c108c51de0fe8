#pragma once

// Text and JSON renderings of the metrics. Output is deterministic: keys in a
// fixed order, efficiencies to 6 decimals, P.S.C. counts as exact integers,
// real-valued P.S.C. bounds to 4 decimals.

#include "encap/graph.hpp"
#include "encap/ingest.hpp"
#include "encap/uniform.hpp"

#include <string>
#include <utility>
#include <vector>

namespace encap {

enum class Format { table, json };

/// Throws InvalidInput for anything other than "table" or "json".
Format parse_format(std::string_view text);

std::string render_uniform(const UniformSystem& sys, Format format);

/// A single efficiency value to 6 decimals plus newline.
std::string render_fraction(double value);

std::string render_analysis(const GraphMetrics& m, Format format);

/// Human-readable scan summary (counts, skipped files, warnings).
std::string render_scan_diagnostics(const ScanDiagnostics& d);

/// Ordered flat JSON object; values are inserted as pre-rendered literals.
class JsonObject {
public:
    JsonObject& raw(std::string key, std::string literal);
    JsonObject& string(std::string key, std::string_view value);
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

/// Two-column key/value table with the value column aligned.
std::string render_key_values(const std::vector<std::pair<std::string, std::string>>& rows);

/// Column-aligned table; the first row is the header.
std::string render_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace encap
