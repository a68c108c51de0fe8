#include "encap/verify.hpp"

#include "encap/error.hpp"
#include "encap/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace encap {

namespace {

bool close_relative(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

void record(SuiteResult& suite, bool ok, const std::string& what) {
    ++suite.checked;
    if (ok) return;
    if (suite.failures++ == 0) suite.first_failure = what;
}

template <class F>
void for_each_uniform(Count max_n, F&& visit) {
    for (Count n = 1; n <= max_n; ++n) {
        for (Count r = 1; r <= n; ++r) {
            if (n % r != 0) continue;
            for (Count p = 1; p <= n / r; ++p) visit(UniformSystem::make(n, r, p));
        }
    }
}

bool is_tight(Count n, Count p) {
    if (n % p != 0) return false;
    const Count q = n / p;
    const auto root = static_cast<Count>(std::llround(std::sqrt(static_cast<double>(q))));
    return root * root == q && n % root == 0;
}

}  // namespace

UnitGraph random_graph(std::mt19937_64& rng, Count max_n) {
    const Count n = std::uniform_int_distribution<Count>(1, std::max<Count>(1, max_n))(rng);
    const Count regions = std::uniform_int_distribution<Count>(1, n)(rng);
    std::uniform_int_distribution<Count> pick_region(0, regions - 1);
    std::bernoulli_distribution pick_flag(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
    std::vector<Unit> units;
    units.reserve(n);
    for (Count i = 0; i < n; ++i) {
        units.push_back({fmt::format("u{}", i), fmt::format("R{}", pick_region(rng)), pick_flag(rng)});
    }
    return UnitGraph(std::move(units));
}

SuiteResult verify_pair_enumeration(Count max_n, Count graphs, std::uint64_t seed) {
    SuiteResult suite{"pair-enumeration equivalence", 0, 0, {}};
    std::mt19937_64 rng(seed);
    for (Count i = 0; i < graphs; ++i) {
        const UnitGraph g = random_graph(rng, max_n);
        const PscValue fast = psc_actual(g);
        const PscValue slow = psc_by_pair_enumeration(g);
        record(suite, fast == slow,
               fmt::format("graph {} (n={}): psc_actual {} != pair count {}", i, g.size(), fast.value, slow.value));
    }
    return suite;
}

SuiteResult verify_uniform_consistency(Count max_n) {
    SuiteResult suite{"uniform consistency", 0, 0, {}};
    for (Count n = 1; n <= max_n; ++n) {
        for (Count r = 1; r <= n; ++r) {
            if (n % r != 0) continue;
            for (Count p = 0; p <= n / r; ++p) {
                const UniformSystem sys = UniformSystem::make(n, r, p);
                const UnitGraph g = build_uniform_graph(sys);
                const bool ok = psc_actual(g) == psc_uniform(sys) && total_ihv(g) == sys.total_violations();
                record(suite, ok, fmt::format("(n={}, r={}, p={})", n, r, p));
            }
        }
    }
    return suite;
}

SuiteResult verify_complement_identity(Count max_n) {
    SuiteResult suite{"complement and ratio identities", 0, 0, {}};
    for_each_uniform(max_n, [&](const UniformSystem& sys) {
        if (sys.p() == sys.n()) return;
        const double ce = config_efficiency(sys);
        const double ci = config_inefficiency(sys);
        const double s = static_cast<double>(psc_uniform(sys).value);
        const double s_max = static_cast<double>(psc_max(sys.n()).value);
        const double s_min = psc_min_closed(sys.n(), sys.p());
        const double ratio = (s_max - s) / (s_max - s_min);
        const bool ok = std::abs(ce + ci - 1.0) <= kIdentityTolerance &&
                        close_relative(ce, ratio, kIdentityTolerance) && ce >= 0.0 && ce <= 1.0 &&
                        ci >= 0.0 && ci <= 1.0;
        record(suite, ok,
               fmt::format("(n={}, r={}, p={}): ce={} ci={} ratio={}", sys.n(), sys.r(), sys.p(), ce, ci, ratio));
    });
    return suite;
}

SuiteResult verify_lower_bound(Count max_n) {
    SuiteResult suite{"lower bound", 0, 0, {}};
    for (Count n = 1; n <= max_n; ++n) {
        for (Count p = 1; p <= n; ++p) {
            const MinOverRegions best = brute_force_min_over_r(n, p);
            const double closed = psc_min_closed(n, p);
            const double found = static_cast<double>(best.psc.value);
            bool ok = found >= closed;
            if (is_tight(n, p)) ok = ok && close_relative(found, closed, 1e-9);
            record(suite, ok, fmt::format("(n={}, p={}): brute {} vs closed {}", n, p, best.psc.value, closed));
        }
    }
    return suite;
}

SuiteResult verify_limit_chain(Count max_n) {
    SuiteResult suite{"limit chain", 0, 0, {}};
    for_each_uniform(max_n, [&](const UniformSystem& sys) {
        const auto n = static_cast<std::int64_t>(sys.n());
        const auto r = static_cast<std::int64_t>(sys.r());
        const auto p = static_cast<std::int64_t>(sys.p());
        const Fraction by_size = ce_limit_fixed_size_exact(sys.p(), sys.units_per_region());
        const Fraction by_regions = Fraction(1) - Fraction(r * p, n);
        const Fraction by_violations = ce_limit_ihv_exact(total_ihv(build_uniform_graph(sys)), sys.n());
        record(suite, by_size == by_regions && by_regions == by_violations,
               fmt::format("(n={}, r={}, p={})", n, r, p));
    });
    return suite;
}

std::vector<SuiteResult> run_verification(Count max_n) {
    if (max_n < 4) throw InvalidInput("max-n must be at least 4");
    return {
        verify_pair_enumeration(std::min<Count>(max_n, 50), 1000, 20081116),
        verify_uniform_consistency(max_n),
        verify_complement_identity(max_n),
        verify_lower_bound(max_n),
        verify_limit_chain(max_n),
    };
}

bool all_passed(const std::vector<SuiteResult>& suites) {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string render_verification(const std::vector<SuiteResult>& suites) {
    std::vector<std::vector<std::string>> cells = {{"suite", "checked", "failures"}};
    for (const SuiteResult& s : suites) {
        cells.push_back({s.name, fmt::format("{}", s.checked), fmt::format("{}", s.failures)});
    }
    std::string out = render_columns(cells);
    for (const SuiteResult& s : suites) {
        if (!s.passed()) out += fmt::format("first failure in {}: {}\n", s.name, s.first_failure);
    }
    out += all_passed(suites) ? "result: PASS\n" : "result: FAIL\n";
    return out;
}

}  // namespace encap
