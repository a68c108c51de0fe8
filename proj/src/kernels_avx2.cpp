#include "encap/kernels.hpp"

#include "encap/uniform.hpp"

#include <immintrin.h>

#include <bit>
#include <cstddef>

namespace encap::kernels::avx2 {

std::uint64_t count_visible_pairs(std::span<const std::uint32_t> region,
                                  std::span<const std::uint8_t> violational) {
    const std::size_t n = region.size();
    const std::size_t body = n - n % 8;
    std::uint64_t total = 0;
    for (std::size_t u = 0; u < n; ++u) {
        const std::uint32_t home = region[u];
        const __m256i home_v = _mm256_set1_epi32(static_cast<int>(home));
        const __m256i zero = _mm256_setzero_si256();
        std::uint64_t row = 0;
        std::size_t v = 0;
        for (; v < body; v += 8) {
            const __m256i reg =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(region.data() + v));
            const __m128i flags8 =
                _mm_loadl_epi64(reinterpret_cast<const __m128i*>(violational.data() + v));
            const __m256i flags = _mm256_cvtepu8_epi32(flags8);
            const __m256i same = _mm256_cmpeq_epi32(reg, home_v);
            const __m256i hidden = _mm256_cmpeq_epi32(flags, zero);
            const __m256i visible = _mm256_or_si256(same, _mm256_xor_si256(hidden, _mm256_set1_epi32(-1)));
            const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(visible));
            row += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(mask)));
        }
        for (; v < n; ++v) {
            row += (region[v] == home || violational[v] != 0) ? 1 : 0;
        }
        total += row - 1;
    }
    return total;
}

void config_efficiency_batch(std::span<const double> n, std::span<const double> r, double p,
                             std::span<double> out) {
    const std::size_t count = n.size();
    const std::size_t body = count - count % 4;
    const __m256d p_v = _mm256_set1_pd(p);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i < body; i += 4) {
        const __m256d nv = _mm256_loadu_pd(n.data() + i);
        const __m256d rv = _mm256_loadu_pd(r.data() + i);
        // Same operation order as config_efficiency_raw.
        const __m256d numerator = _mm256_sub_pd(
            _mm256_sub_pd(_mm256_add_pd(nv, p_v), _mm256_div_pd(nv, rv)), _mm256_mul_pd(rv, p_v));
        const __m256d root = _mm256_sqrt_pd(_mm256_mul_pd(nv, p_v));
        const __m256d denominator = _mm256_add_pd(_mm256_sub_pd(nv, _mm256_mul_pd(two, root)), p_v);
        const __m256d ce = _mm256_div_pd(numerator, denominator);
        // max_pd(a, b) is (a > b ? a : b), which matches std::max(ce, 0.0) exactly
        // with the operands in this order, NaN and signed zero included.
        _mm256_storeu_pd(out.data() + i, _mm256_min_pd(one, _mm256_max_pd(zero, ce)));
    }
    for (; i < count; ++i) {
        out[i] = config_efficiency_raw(n[i], r[i], p);
    }
}

}  // namespace encap::kernels::avx2
