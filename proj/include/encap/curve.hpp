#pragma once

// Configuration efficiency against system size for fixed-size regions,
// sampled toward the asymptote 1 - p/x.

#include "encap/uniform.hpp"

#include <iosfwd>
#include <vector>

namespace encap {

struct CurvePoint {
    Count n = 0;
    double ce = 0.0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CurveSeries {
    Count x = 0;
    Count p = 0;
    std::vector<CurvePoint> points;
    double asymptote = 0.0;
};

struct CurveRequest {
    Count x = 0;
    Count p = 0;
    Count n_start = 0;
    Count n_end = 0;
    Count points = 0;
    bool log_spacing = false;
};

/// Requested sizes rounded to the nearest positive multiple of x, ascending and
/// deduplicated. Throws InvalidInput on infeasible ranges (p == 0, p >= x,
/// n_start < x, n_end < n_start, points == 0).
std::vector<Count> curve_sample_sizes(const CurveRequest& req);

CurveSeries make_curve(const CurveRequest& req);

/// Header "n,config_efficiency", one row per point, then "# asymptote,<value>".
void write_curve_csv(const CurveSeries& curve, std::ostream& out);

/// Reads the format written by write_curve_csv; x and p are left at zero.
CurveSeries parse_curve_csv(std::istream& in);

/// Points ascending by n, every n a positive multiple of x, every ce in [0, 1].
bool curve_invariants_hold(const CurveSeries& curve);

}  // namespace encap
