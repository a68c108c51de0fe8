#pragma once

// Brute-force oracle suites run by `encap verify`.

#include "encap/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace encap {

struct SuiteResult {
    std::string name;
    Count checked = 0;
    Count failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0; }
};

/// Relative tolerance for floating-point identities.
inline constexpr double kIdentityTolerance = 1e-12;

/// Random partition of 1..max_n units into up to n regions with random flags.
UnitGraph random_graph(std::mt19937_64& rng, Count max_n);

SuiteResult verify_pair_enumeration(Count max_n, Count graphs, std::uint64_t seed);
SuiteResult verify_uniform_consistency(Count max_n);
SuiteResult verify_complement_identity(Count max_n);
SuiteResult verify_lower_bound(Count max_n);
SuiteResult verify_limit_chain(Count max_n);

/// All suites. Pair enumeration uses graphs of at most min(max_n, 50) units.
/// Throws InvalidInput when max_n < 4.
std::vector<SuiteResult> run_verification(Count max_n);

bool all_passed(const std::vector<SuiteResult>& suites);

std::string render_verification(const std::vector<SuiteResult>& suites);

}  // namespace encap
