#pragma once

// Closed-form encapsulation metrics over a uniformly distributed system of
// n program units split into r equal regions, each exposing p units.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>

namespace encap {

using Count = std::uint64_t;
using Fraction = boost::rational<std::int64_t>;

/// Exact count of potential (ordered) dependencies.
struct PscValue {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(PscValue, PscValue) = default;
};

class UniformSystem {
public:
    /// Throws InvalidInput naming the first violated constraint.
    static UniformSystem make(Count n, Count r, Count p);

    Count n() const noexcept { return n_; }
    Count r() const noexcept { return r_; }
    Count p() const noexcept { return p_; }
    Count units_per_region() const noexcept { return n_ / r_; }

    /// |h(G)| = r * p.
    Count total_violations() const noexcept { return r_ * p_; }

    friend constexpr bool operator==(const UniformSystem&, const UniformSystem&) = default;

private:
    UniformSystem(Count n, Count r, Count p) : n_(n), r_(r), p_(p) {}

    Count n_;
    Count r_;
    Count p_;
};

/// n(n-1): every unit sees every other unit.
PscValue psc_max(Count n);

/// n(n/r - 1 + (r-1)p).
PscValue psc_uniform(const UniformSystem& sys);

/// n(2*sqrt(np) - 1 - p), a lower bound on psc_uniform over every r. Requires 1 <= p <= n.
double psc_min_closed(Count n, Count p);

/// Real-valued form of psc_min_closed with no range checks; p may be fractional.
double psc_min_closed_real(double n, double p);

/// (n/r + rp - 2*sqrt(np)) / (n - 2*sqrt(np) + p).
/// Throws InvalidInput when p == 0 and NoConfigurationFreedom when p == n.
double config_inefficiency(const UniformSystem& sys);

/// (n + p - n/r - rp) / (n - 2*sqrt(np) + p), i.e. 1 - c_i.
double config_efficiency(const UniformSystem& sys);

/// Configuration efficiency from raw real-valued parameters, no validation.
/// This is the scalar reference for kernels::config_efficiency_batch.
double config_efficiency_raw(double n, double r, double p);

/// Limit of c_e as n grows with x units per region held fixed: 1 - p/x.
double ce_limit_fixed_size(Count p, Count x);
Fraction ce_limit_fixed_size_exact(Count p, Count x);

/// Limit of c_e expressed through the system-wide violation count: 1 - |h(G)|/n.
double ce_limit_ihv(Count h_total, Count n);
Fraction ce_limit_ihv_exact(Count h_total, Count n);

/// sqrt(n/p), the real-valued region count minimising psc_uniform.
double optimal_region_count(Count n, Count p);

}  // namespace encap
