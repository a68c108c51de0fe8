#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference and, where the
// build and CPU allow it, an AVX2 variant; the unqualified entry points pick
// the widest variant the running CPU supports.

#include <cstdint>
#include <span>
#include <string_view>

namespace encap::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when the AVX2 variants were compiled in and the CPU reports AVX2.
bool avx2_available() noexcept;

/// Widest variant usable on this machine.
Isa best_isa() noexcept;

/// Ordered pairs (u, v), u != v, with region[v] == region[u] or violational[v] != 0.
/// Both spans must have the same length.
std::uint64_t count_visible_pairs(std::span<const std::uint32_t> region,
                                  std::span<const std::uint8_t> violational);
std::uint64_t count_visible_pairs(Isa isa, std::span<const std::uint32_t> region,
                                  std::span<const std::uint8_t> violational);

/// out[i] = config_efficiency_raw(n[i], r[i], p). All spans must have the same length.
void config_efficiency_batch(std::span<const double> n, std::span<const double> r, double p,
                             std::span<double> out);
void config_efficiency_batch(Isa isa, std::span<const double> n, std::span<const double> r,
                             double p, std::span<double> out);

namespace scalar {
std::uint64_t count_visible_pairs(std::span<const std::uint32_t> region,
                                  std::span<const std::uint8_t> violational);
void config_efficiency_batch(std::span<const double> n, std::span<const double> r, double p,
                             std::span<double> out);
}  // namespace scalar

#if defined(ENCAP_HAVE_AVX2)
namespace avx2 {
std::uint64_t count_visible_pairs(std::span<const std::uint32_t> region,
                                  std::span<const std::uint8_t> violational);
void config_efficiency_batch(std::span<const double> n, std::span<const double> r, double p,
                             std::span<double> out);
}  // namespace avx2
#endif

}  // namespace encap::kernels
