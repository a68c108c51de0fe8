#include "encap/kernels.hpp"

#include "encap/error.hpp"

namespace encap::kernels {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) throw InvalidInput("kernel input spans differ in length");
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::avx2:
            return "avx2";
        case Isa::scalar:
            break;
    }
    return "scalar";
}

bool avx2_available() noexcept {
#if defined(ENCAP_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") != 0;
    return supported;
#else
    return false;
#endif
}

Isa best_isa() noexcept { return avx2_available() ? Isa::avx2 : Isa::scalar; }

std::uint64_t count_visible_pairs(Isa isa, std::span<const std::uint32_t> region,
                                  std::span<const std::uint8_t> violational) {
    require_same_length(region.size(), violational.size());
#if defined(ENCAP_HAVE_AVX2)
    if (isa == Isa::avx2 && avx2_available()) return avx2::count_visible_pairs(region, violational);
#endif
    if (isa == Isa::avx2) throw InvalidInput("AVX2 kernels are not available on this machine");
    return scalar::count_visible_pairs(region, violational);
}

std::uint64_t count_visible_pairs(std::span<const std::uint32_t> region,
                                  std::span<const std::uint8_t> violational) {
    return count_visible_pairs(best_isa(), region, violational);
}

void config_efficiency_batch(Isa isa, std::span<const double> n, std::span<const double> r,
                             double p, std::span<double> out) {
    require_same_length(n.size(), r.size());
    require_same_length(n.size(), out.size());
#if defined(ENCAP_HAVE_AVX2)
    if (isa == Isa::avx2 && avx2_available()) return avx2::config_efficiency_batch(n, r, p, out);
#endif
    if (isa == Isa::avx2) throw InvalidInput("AVX2 kernels are not available on this machine");
    scalar::config_efficiency_batch(n, r, p, out);
}

void config_efficiency_batch(std::span<const double> n, std::span<const double> r, double p,
                             std::span<double> out) {
    config_efficiency_batch(best_isa(), n, r, p, out);
}

}  // namespace encap::kernels
