#pragma once

// Test-only oracles. These deliberately avoid the library's aggregation and
// SIMD paths: everything is counted one ordered pair at a time.

#include "encap/graph.hpp"

#include <cstdint>

namespace oracle {

inline std::uint64_t ordered_pairs(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
        for (std::uint64_t v = 0; v < n; ++v) count += u != v ? 1 : 0;
    }
    return count;
}

/// v is visible to u when it shares u's region or is public.
inline std::uint64_t visible_pairs(const encap::UnitGraph& g) {
    const auto& units = g.units();
    std::uint64_t count = 0;
    for (std::size_t u = 0; u < units.size(); ++u) {
        for (std::size_t v = 0; v < units.size(); ++v) {
            if (u == v) continue;
            if (units[v].region == units[u].region || units[v].violational) ++count;
        }
    }
    return count;
}

/// Pair walk over an explicitly materialised uniform graph.
inline std::uint64_t uniform_visible_pairs(std::uint64_t n, std::uint64_t r, std::uint64_t p) {
    const std::uint64_t x = n / r;
    std::uint64_t count = 0;
    for (std::uint64_t u = 0; u < n; ++u) {
        for (std::uint64_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const bool same_region = u / x == v / x;
            const bool exposed = v % x < p;
            if (same_region || exposed) ++count;
        }
    }
    return count;
}

struct Best {
    std::uint64_t r = 0;
    std::uint64_t psc = 0;
};

/// Minimum over every divisor r of n of the pair-walked P.S.C.; smallest r on ties.
inline Best min_over_r_by_pairs(std::uint64_t n, std::uint64_t p) {
    Best best;
    for (std::uint64_t r = 1; r <= n; ++r) {
        if (n % r != 0 || p > n / r) continue;
        const std::uint64_t s = uniform_visible_pairs(n, r, p);
        if (best.r == 0 || s < best.psc) best = {r, s};
    }
    return best;
}

}  // namespace oracle
