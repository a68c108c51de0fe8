#include "encap/report.hpp"

#include "encap/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <optional>

namespace encap {

namespace {

std::string efficiency(double v) { return fmt::format("{:.6f}", v); }
std::string bound(double v) { return fmt::format("{:.4f}", v); }

std::string json_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    out += fmt::format("\\u{:04x}", static_cast<unsigned>(c));
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "table") return Format::table;
    if (text == "json") return Format::json;
    throw InvalidInput(fmt::format("unknown format '{}' (expected table or json)", text));
}

JsonObject& JsonObject::raw(std::string key, std::string literal) {
    fields_.emplace_back(std::move(key), std::move(literal));
    return *this;
}

JsonObject& JsonObject::string(std::string key, std::string_view value) {
    return raw(std::move(key), "\"" + json_escape(value) + "\"");
}

std::string JsonObject::str() const {
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        out += fmt::format("  \"{}\": {}{}\n", json_escape(fields_[i].first), fields_[i].second,
                           i + 1 < fields_.size() ? "," : "");
    }
    out += "}\n";
    return out;
}

std::string render_key_values(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    std::string out;
    for (const auto& [key, value] : rows) out += fmt::format("{:<{}}  {}\n", key, width, value);
    return out;
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            // Left-align the first column (names), right-align numbers.
            line += c == 0 ? fmt::format("{:<{}}", row[c], widths[c]) : fmt::format("{:>{}}", row[c], widths[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_uniform(const UniformSystem& sys, Format format) {
    if (sys.p() == 0) throw InvalidInput("p must be at least 1");
    const PscValue s = psc_uniform(sys);
    const PscValue s_max = psc_max(sys.n());
    const double s_min = psc_min_closed(sys.n(), sys.p());
    const double limit = ce_limit_fixed_size(sys.p(), sys.units_per_region());

    std::optional<double> ce;
    std::optional<double> ci;
    try {
        ce = config_efficiency(sys);
        ci = config_inefficiency(sys);
    } catch (const NoConfigurationFreedom&) {
    }
    constexpr std::string_view note = "no configuration freedom: every unit is public in a single region";

    if (format == Format::json) {
        JsonObject obj;
        obj.raw("n", fmt::format("{}", sys.n()))
            .raw("r", fmt::format("{}", sys.r()))
            .raw("p", fmt::format("{}", sys.p()))
            .raw("x", fmt::format("{}", sys.units_per_region()))
            .raw("psc_actual", fmt::format("{}", s.value))
            .raw("psc_max", fmt::format("{}", s_max.value))
            .raw("psc_min", bound(s_min))
            .raw("config_efficiency", ce ? efficiency(*ce) : "null")
            .raw("config_inefficiency", ci ? efficiency(*ci) : "null")
            .raw("ce_limit", efficiency(limit));
        if (!ce) obj.string("note", note);
        return obj.str();
    }

    std::vector<std::pair<std::string, std::string>> rows = {
        {"units (n)", fmt::format("{}", sys.n())},
        {"regions (r)", fmt::format("{}", sys.r())},
        {"public per region (p)", fmt::format("{}", sys.p())},
        {"units per region (x)", fmt::format("{}", sys.units_per_region())},
        {"P.S.C. actual", fmt::format("{}", s.value)},
        {"P.S.C. max", fmt::format("{}", s_max.value)},
        {"P.S.C. min", bound(s_min)},
        {"config efficiency", ce ? efficiency(*ce) : "n/a"},
        {"config inefficiency", ci ? efficiency(*ci) : "n/a"},
        {"efficiency limit (1 - p/x)", efficiency(limit)},
    };
    if (!ce) rows.emplace_back("note", std::string(note));
    return render_key_values(rows);
}

std::string render_fraction(double value) { return efficiency(value) + "\n"; }

std::string render_analysis(const GraphMetrics& m, Format format) {
    if (format == Format::json) {
        JsonObject obj;
        obj.raw("n", fmt::format("{}", m.n))
            .raw("region_count", fmt::format("{}", m.region_count))
            .raw("ihv_total", fmt::format("{}", m.ihv_total))
            .raw("mean_regional_ihv", efficiency(m.mean_regional_ihv))
            .raw("psc_actual", fmt::format("{}", m.psc_actual.value))
            .raw("psc_max", fmt::format("{}", m.psc_max.value))
            .raw("psc_min_estimate", bound(m.psc_min_estimate))
            .raw("config_efficiency", m.config_efficiency ? efficiency(*m.config_efficiency) : "null")
            .raw("config_inefficiency", m.config_inefficiency ? efficiency(*m.config_inefficiency) : "null")
            .raw("approx_config_efficiency", efficiency(m.approx_config_efficiency))
            .raw("uniform", m.uniform ? "true" : "false");
        if (!m.config_efficiency) obj.string("note", "no configuration freedom");
        return obj.str();
    }

    std::vector<std::pair<std::string, std::string>> rows = {
        {"units (n)", fmt::format("{}", m.n)},
        {"regions (r)", fmt::format("{}", m.region_count)},
        {"public units |h(G)|", fmt::format("{}", m.ihv_total)},
        {"mean public per region", efficiency(m.mean_regional_ihv)},
        {"P.S.C. actual", fmt::format("{}", m.psc_actual.value)},
        {"P.S.C. max", fmt::format("{}", m.psc_max.value)},
        {m.uniform ? "P.S.C. min" : "P.S.C. min (estimate)", bound(m.psc_min_estimate)},
        {"config efficiency", m.config_efficiency ? efficiency(*m.config_efficiency) : "n/a"},
        {"config inefficiency", m.config_inefficiency ? efficiency(*m.config_inefficiency) : "n/a"},
        {"approx efficiency (1 - |h|/n)", efficiency(m.approx_config_efficiency)},
        {"uniform", m.uniform ? "yes" : "no (efficiency uses the estimated minimum)"},
    };
    if (!m.config_efficiency) rows.emplace_back("note", "no configuration freedom");
    return render_key_values(rows);
}

std::string render_scan_diagnostics(const ScanDiagnostics& d) {
    std::string out = fmt::format("scanned {} files, found {} units, skipped {} files\n", d.files_scanned,
                                  d.units_found, d.files_skipped.size());
    for (const SkippedFile& f : d.files_skipped) out += fmt::format("skipped {}: {}\n", f.path, f.reason);
    for (const std::string& w : d.warnings) out += fmt::format("warning: {}\n", w);
    return out;
}

}  // namespace encap
