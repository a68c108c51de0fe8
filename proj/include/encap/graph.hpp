#pragma once

#include "encap/uniform.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace encap {

struct Unit {
    std::string id;
    std::string region;
    bool violational = false;

    friend bool operator==(const Unit&, const Unit&) = default;
};

struct RegionSummary {
    std::string region;
    Count size = 0;
    Count violations = 0;

    friend bool operator==(const RegionSummary&, const RegionSummary&) = default;
};

/// A concrete system: program units, each in exactly one region, some visible
/// outside it. Immutable once built. Units keep their construction order for
/// iteration; equality ignores order.
class UnitGraph {
public:
    /// Throws InvalidInput on an empty system, duplicate ids, empty or
    /// line-breaking ids/regions.
    explicit UnitGraph(std::vector<Unit> units);

    const std::vector<Unit>& units() const noexcept { return units_; }
    Count size() const noexcept { return units_.size(); }

    /// One entry per region, ordered by region name.
    const std::vector<RegionSummary>& regions() const noexcept { return regions_; }

    /// Per-unit index into regions(), parallel to units().
    const std::vector<std::uint32_t>& region_index() const noexcept { return region_index_; }
    /// Per-unit 0/1 flag, parallel to units().
    const std::vector<std::uint8_t>& violational_flags() const noexcept { return flags_; }

    /// Units ordered by (region, id).
    std::vector<Unit> sorted_units() const;

    friend bool operator==(const UnitGraph& a, const UnitGraph& b);

private:
    std::vector<Unit> units_;
    std::vector<RegionSummary> regions_;
    std::vector<std::uint32_t> region_index_;
    std::vector<std::uint8_t> flags_;
};

struct GraphMetrics {
    Count n = 0;
    Count region_count = 0;
    Count ihv_total = 0;
    double mean_regional_ihv = 0.0;
    PscValue psc_actual;
    PscValue psc_max;
    double psc_min_estimate = 0.0;
    /// Empty when the system has no configuration freedom (s_max == s_min).
    std::optional<double> config_efficiency;
    std::optional<double> config_inefficiency;
    double approx_config_efficiency = 0.0;
    bool uniform = false;
};

/// Sum over units of (own region size - 1) + violational units in other regions.
PscValue psc_actual(const UnitGraph& g);

/// Same quantity as psc_actual, counted pair by pair. O(n^2).
PscValue psc_by_pair_enumeration(const UnitGraph& g);

/// r regions "K0".."K{r-1}" of n/r units "u0".."u{n-1}"; the first p units of
/// each region are violational.
UnitGraph build_uniform_graph(const UniformSystem& sys);

/// |h(G)|.
Count total_ihv(const UnitGraph& g);

GraphMetrics metrics_for_graph(const UnitGraph& g);

struct MinOverRegions {
    Count r = 0;
    PscValue psc;

    friend bool operator==(const MinOverRegions&, const MinOverRegions&) = default;
};

/// Exhaustive minimum of psc_uniform over every divisor r of n with p <= n/r.
/// Ties go to the smaller r. Throws InvalidInput when p == 0 or p > n.
MinOverRegions brute_force_min_over_r(Count n, Count p);

}  // namespace encap
