#include "encap/curve.hpp"

#include "encap/error.hpp"
#include "encap/kernels.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

namespace encap {

std::vector<Count> curve_sample_sizes(const CurveRequest& req) {
    if (req.x == 0) throw InvalidInput("x must be at least 1");
    if (req.p == 0) throw InvalidInput("p must be at least 1");
    if (req.p >= req.x) throw InvalidInput("p must be less than x");
    if (req.n_start < req.x) throw InvalidInput("n-start must be at least x");
    if (req.n_end < req.n_start) throw InvalidInput("n-end must not be less than n-start");
    if (req.points == 0) throw InvalidInput("points must be at least 1");

    const double lo = static_cast<double>(req.n_start);
    const double hi = static_cast<double>(req.n_end);
    const double x = static_cast<double>(req.x);
    std::vector<Count> sizes;
    sizes.reserve(req.points);
    for (Count i = 0; i < req.points; ++i) {
        const double t = req.points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(req.points - 1);
        const double target = req.log_spacing ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
        const auto multiple = std::max<long long>(1, std::llround(target / x));
        sizes.push_back(static_cast<Count>(multiple) * req.x);
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    return sizes;
}

CurveSeries make_curve(const CurveRequest& req) {
    const std::vector<Count> sizes = curve_sample_sizes(req);
    std::vector<double> n(sizes.size());
    std::vector<double> r(sizes.size());
    std::vector<double> ce(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        n[i] = static_cast<double>(sizes[i]);
        r[i] = static_cast<double>(sizes[i] / req.x);
    }
    kernels::config_efficiency_batch(n, r, static_cast<double>(req.p), ce);

    CurveSeries curve{req.x, req.p, {}, ce_limit_fixed_size(req.p, req.x)};
    curve.points.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) curve.points.push_back({sizes[i], ce[i]});
    return curve;
}

void write_curve_csv(const CurveSeries& curve, std::ostream& out) {
    out << "n,config_efficiency\n";
    for (const CurvePoint& pt : curve.points) out << fmt::format("{},{:.6f}\n", pt.n, pt.ce);
    out << fmt::format("# asymptote,{:.6f}\n", curve.asymptote);
}

CurveSeries parse_curve_csv(std::istream& in) {
    auto parse_double = [](std::string_view text, std::size_t line) {
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw InvalidInput(fmt::format("curve line {}: bad number '{}'", line, text));
        }
        return value;
    };

    CurveSeries curve;
    std::string line;
    std::size_t line_no = 0;
    bool saw_asymptote = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != "n,config_efficiency") throw InvalidInput("curve: bad header");
            continue;
        }
        if (saw_asymptote) throw InvalidInput(fmt::format("curve line {}: data after asymptote", line_no));
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw InvalidInput(fmt::format("curve line {}: missing ','", line_no));
        const std::string_view head(line.data(), comma);
        const std::string_view tail(line.data() + comma + 1, line.size() - comma - 1);
        if (head == "# asymptote") {
            curve.asymptote = parse_double(tail, line_no);
            saw_asymptote = true;
            continue;
        }
        Count n = 0;
        const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
        if (ec != std::errc() || ptr != head.data() + head.size()) {
            throw InvalidInput(fmt::format("curve line {}: bad size '{}'", line_no, head));
        }
        curve.points.push_back({n, parse_double(tail, line_no)});
    }
    if (line_no == 0) throw InvalidInput("curve: empty input");
    if (!saw_asymptote) throw InvalidInput("curve: missing asymptote line");
    return curve;
}

bool curve_invariants_hold(const CurveSeries& curve) {
    if (curve.x == 0) return false;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const CurvePoint& pt = curve.points[i];
        if (pt.n == 0 || pt.n % curve.x != 0) return false;
        if (!(pt.ce >= 0.0 && pt.ce <= 1.0)) return false;
        if (i > 0 && curve.points[i - 1].n >= pt.n) return false;
    }
    return true;
}

}  // namespace encap
