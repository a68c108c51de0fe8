#include "encap/uniform.hpp"

#include "encap/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace encap {

namespace {

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
    const auto wide = static_cast<unsigned __int128>(a) * b;
    if (wide > std::numeric_limits<std::uint64_t>::max()) {
        throw InvalidInput(fmt::format("P.S.C. of {} x {} overflows 64 bits", a, b));
    }
    return static_cast<std::uint64_t>(wide);
}

void require_violations(Count n, Count p) {
    if (n == 0) throw InvalidInput("n must be at least 1");
    if (p == 0) throw InvalidInput("p must be at least 1");
    if (p > n) throw InvalidInput("p must not exceed n");
}

}  // namespace

UniformSystem UniformSystem::make(Count n, Count r, Count p) {
    if (n == 0) throw InvalidInput("n must be at least 1");
    if (r == 0) throw InvalidInput("r must be at least 1");
    if (r > n) throw InvalidInput("r must not exceed n");
    if (n % r != 0) throw InvalidInput("r must divide n");
    if (p > n / r) throw InvalidInput("p must not exceed n/r");
    return UniformSystem(n, r, p);
}

PscValue psc_max(Count n) {
    if (n == 0) throw InvalidInput("n must be at least 1");
    return {checked_product(n, n - 1)};
}

PscValue psc_uniform(const UniformSystem& sys) {
    const Count per_unit = (sys.units_per_region() - 1) + checked_product(sys.r() - 1, sys.p());
    return {checked_product(sys.n(), per_unit)};
}

double psc_min_closed(Count n, Count p) {
    require_violations(n, p);
    // np < 2^64 is exact in the 64-bit mantissa of long double.
    const long double np = static_cast<long double>(n) * static_cast<long double>(p);
    const long double root = std::sqrt(np);
    return static_cast<double>(static_cast<long double>(n) *
                               (2.0L * root - 1.0L - static_cast<long double>(p)));
}

double psc_min_closed_real(double n, double p) {
    return n * (2.0 * std::sqrt(n * p) - 1.0 - p);
}

double config_inefficiency(const UniformSystem& sys) {
    require_violations(sys.n(), sys.p());
    if (sys.p() == sys.n()) throw NoConfigurationFreedom();
    const double n = static_cast<double>(sys.n());
    const double r = static_cast<double>(sys.r());
    const double p = static_cast<double>(sys.p());
    const double root = std::sqrt(n * p);
    const double ci = ((n / r + r * p) - 2.0 * root) / ((n - 2.0 * root) + p);
    return std::clamp(ci, 0.0, 1.0);
}

double config_efficiency_raw(double n, double r, double p) {
    const double numerator = ((n + p) - n / r) - r * p;
    const double denominator = (n - 2.0 * std::sqrt(n * p)) + p;
    return std::min(std::max(numerator / denominator, 0.0), 1.0);
}

double config_efficiency(const UniformSystem& sys) {
    require_violations(sys.n(), sys.p());
    if (sys.p() == sys.n()) throw NoConfigurationFreedom();
    return config_efficiency_raw(static_cast<double>(sys.n()), static_cast<double>(sys.r()),
                                 static_cast<double>(sys.p()));
}

Fraction ce_limit_fixed_size_exact(Count p, Count x) {
    if (p == 0) throw InvalidInput("p must be at least 1");
    if (p > x) throw InvalidInput("p must not exceed x");
    if (x > static_cast<Count>(std::numeric_limits<std::int64_t>::max())) {
        throw InvalidInput("x is too large");
    }
    return Fraction(1) - Fraction(static_cast<std::int64_t>(p), static_cast<std::int64_t>(x));
}

double ce_limit_fixed_size(Count p, Count x) {
    if (p == 0) throw InvalidInput("p must be at least 1");
    if (p > x) throw InvalidInput("p must not exceed x");
    // (x - p) / x is a single correctly rounded division, so 1/50 gives exactly 0.98.
    return static_cast<double>(x - p) / static_cast<double>(x);
}

Fraction ce_limit_ihv_exact(Count h_total, Count n) {
    if (h_total == 0) throw InvalidInput("violational count must be at least 1");
    if (h_total > n) throw InvalidInput("violational count must not exceed total");
    if (n > static_cast<Count>(std::numeric_limits<std::int64_t>::max())) {
        throw InvalidInput("total is too large");
    }
    return Fraction(1) - Fraction(static_cast<std::int64_t>(h_total), static_cast<std::int64_t>(n));
}

double ce_limit_ihv(Count h_total, Count n) {
    if (h_total == 0) throw InvalidInput("violational count must be at least 1");
    if (h_total > n) throw InvalidInput("violational count must not exceed total");
    return static_cast<double>(n - h_total) / static_cast<double>(n);
}

double optimal_region_count(Count n, Count p) {
    require_violations(n, p);
    return std::sqrt(static_cast<double>(n) / static_cast<double>(p));
}

}  // namespace encap
