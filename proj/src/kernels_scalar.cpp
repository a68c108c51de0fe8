#include "encap/kernels.hpp"

#include "encap/uniform.hpp"

#include <cstddef>

namespace encap::kernels::scalar {

std::uint64_t count_visible_pairs(std::span<const std::uint32_t> region,
                                  std::span<const std::uint8_t> violational) {
    const std::size_t n = region.size();
    std::uint64_t total = 0;
    for (std::size_t u = 0; u < n; ++u) {
        const std::uint32_t home = region[u];
        std::uint64_t row = 0;
        for (std::size_t v = 0; v < n; ++v) {
            row += (region[v] == home || violational[v] != 0) ? 1 : 0;
        }
        // v == u always matched its own region.
        total += row - 1;
    }
    return total;
}

void config_efficiency_batch(std::span<const double> n, std::span<const double> r, double p,
                             std::span<double> out) {
    for (std::size_t i = 0; i < n.size(); ++i) {
        out[i] = config_efficiency_raw(n[i], r[i], p);
    }
}

}  // namespace encap::kernels::scalar
