#include "encap/graph.hpp"

#include "encap/error.hpp"
#include "encap/kernels.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <unordered_set>

namespace encap {

namespace {

bool breaks_line(const std::string& s) {
    return s.find_first_of("\r\n") != std::string::npos;
}

bool by_region_then_id(const Unit& a, const Unit& b) {
    return std::tie(a.region, a.id) < std::tie(b.region, b.id);
}

std::string padded(char prefix, Count value, Count largest) {
    const auto width = fmt::formatted_size("{}", largest);
    return fmt::format("{}{:0{}}", prefix, value, width);
}

}  // namespace

UnitGraph::UnitGraph(std::vector<Unit> units) : units_(std::move(units)) {
    if (units_.empty()) throw InvalidInput("empty system");

    std::unordered_set<std::string_view> seen;
    std::map<std::string, RegionSummary> by_region;
    for (const Unit& u : units_) {
        if (u.id.empty()) throw InvalidInput("unit id must not be empty");
        if (u.region.empty()) throw InvalidInput(fmt::format("unit '{}' has an empty region", u.id));
        if (breaks_line(u.id) || breaks_line(u.region)) {
            throw InvalidInput(fmt::format("unit '{}' contains a line break", u.id));
        }
        if (!seen.insert(u.id).second) throw InvalidInput(fmt::format("duplicate unit id '{}'", u.id));
        RegionSummary& summary = by_region[u.region];
        summary.region = u.region;
        ++summary.size;
        summary.violations += u.violational ? 1 : 0;
    }

    std::map<std::string_view, std::uint32_t> index;
    regions_.reserve(by_region.size());
    for (auto& [name, summary] : by_region) {
        index.emplace(name, static_cast<std::uint32_t>(regions_.size()));
        regions_.push_back(summary);
    }
    region_index_.reserve(units_.size());
    flags_.reserve(units_.size());
    for (const Unit& u : units_) {
        region_index_.push_back(index.at(u.region));
        flags_.push_back(u.violational ? 1 : 0);
    }
}

std::vector<Unit> UnitGraph::sorted_units() const {
    std::vector<Unit> out = units_;
    std::sort(out.begin(), out.end(), by_region_then_id);
    return out;
}

bool operator==(const UnitGraph& a, const UnitGraph& b) {
    return a.size() == b.size() && a.sorted_units() == b.sorted_units();
}

PscValue psc_actual(const UnitGraph& g) {
    const Count hidden_total = total_ihv(g);
    std::uint64_t s = 0;
    for (const RegionSummary& k : g.regions()) {
        // Each unit in k sees its size-1 neighbours plus every exposed unit elsewhere.
        s += k.size * ((k.size - 1) + (hidden_total - k.violations));
    }
    return {s};
}

PscValue psc_by_pair_enumeration(const UnitGraph& g) {
    return {kernels::count_visible_pairs(g.region_index(), g.violational_flags())};
}

UnitGraph build_uniform_graph(const UniformSystem& sys) {
    const Count x = sys.units_per_region();
    std::vector<Unit> units;
    units.reserve(sys.n());
    for (Count k = 0; k < sys.r(); ++k) {
        const std::string region = padded('K', k, sys.r() - 1);
        for (Count j = 0; j < x; ++j) {
            const Count id = k * x + j;
            units.push_back({padded('u', id, sys.n() - 1), region, j < sys.p()});
        }
    }
    return UnitGraph(std::move(units));
}

Count total_ihv(const UnitGraph& g) {
    Count h = 0;
    for (const RegionSummary& k : g.regions()) h += k.violations;
    return h;
}

GraphMetrics metrics_for_graph(const UnitGraph& g) {
    GraphMetrics m;
    m.n = g.size();
    m.region_count = g.regions().size();
    m.ihv_total = total_ihv(g);
    m.mean_regional_ihv = static_cast<double>(m.ihv_total) / static_cast<double>(m.region_count);
    m.psc_actual = psc_actual(g);
    m.psc_max = psc_max(m.n);

    const double s = static_cast<double>(m.psc_actual.value);
    const double s_max = static_cast<double>(m.psc_max.value);
    if (m.ihv_total == 0) {
        m.psc_min_estimate = 0.0;
    } else {
        const double closed = psc_min_closed_real(static_cast<double>(m.n), m.mean_regional_ihv);
        m.psc_min_estimate = std::clamp(closed, 0.0, s);
    }

    const double span = s_max - m.psc_min_estimate;
    if (span > 0.0) {
        m.config_efficiency = std::clamp((s_max - s) / span, 0.0, 1.0);
        m.config_inefficiency = std::clamp((s - m.psc_min_estimate) / span, 0.0, 1.0);
    }
    m.approx_config_efficiency =
        static_cast<double>(m.n - m.ihv_total) / static_cast<double>(m.n);

    const RegionSummary& first = g.regions().front();
    m.uniform = std::all_of(g.regions().begin(), g.regions().end(), [&](const RegionSummary& k) {
        return k.size == first.size && k.violations == first.violations;
    });
    return m;
}

MinOverRegions brute_force_min_over_r(Count n, Count p) {
    if (n == 0) throw InvalidInput("n must be at least 1");
    if (p == 0) throw InvalidInput("p must be at least 1");
    if (p > n) throw InvalidInput("no feasible region count: p exceeds n");

    std::vector<Count> divisors;
    for (Count d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divisors.push_back(d);
        if (d != n / d) divisors.push_back(n / d);
    }
    std::sort(divisors.begin(), divisors.end());

    MinOverRegions best{0, {}};
    for (Count r : divisors) {
        if (p > n / r) break;
        const PscValue s = psc_uniform(UniformSystem::make(n, r, p));
        if (best.r == 0 || s < best.psc) best = {r, s};
    }
    return best;
}

}  // namespace encap
