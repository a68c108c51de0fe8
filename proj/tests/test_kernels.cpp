#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "encap/error.hpp"
#include "encap/kernels.hpp"
#include "encap/uniform.hpp"

#include <bit>
#include <random>
#include <vector>

using namespace encap;

namespace {

struct PairInput {
    std::vector<std::uint32_t> region;
    std::vector<std::uint8_t> flags;
};

PairInput random_input(std::mt19937_64& rng, std::size_t n) {
    PairInput in;
    const std::uint32_t regions = std::uniform_int_distribution<std::uint32_t>(1, static_cast<std::uint32_t>(n) + 1)(rng);
    std::uniform_int_distribution<std::uint32_t> pick(0, regions - 1);
    std::bernoulli_distribution coin(0.3);
    for (std::size_t i = 0; i < n; ++i) {
        in.region.push_back(pick(rng));
        in.flags.push_back(coin(rng) ? 1 : 0);
    }
    return in;
}

std::uint64_t naive_pairs(const PairInput& in) {
    std::uint64_t count = 0;
    for (std::size_t u = 0; u < in.region.size(); ++u) {
        for (std::size_t v = 0; v < in.region.size(); ++v) {
            if (u != v && (in.region[u] == in.region[v] || in.flags[v])) ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("scalar pair kernel matches a naive count") {
    std::mt19937_64 rng(42);
    for (std::size_t n = 0; n <= 70; ++n) {
        const PairInput in = random_input(rng, n);
        CHECK(kernels::scalar::count_visible_pairs(in.region, in.flags) == naive_pairs(in));
    }
}

TEST_CASE("dispatched kernels agree with the scalar reference") {
    MESSAGE("best ISA: " << kernels::isa_name(kernels::best_isa()));
    std::mt19937_64 rng(43);
    for (std::size_t n = 0; n <= 70; ++n) {
        const PairInput in = random_input(rng, n);
        CHECK(kernels::count_visible_pairs(in.region, in.flags) ==
              kernels::scalar::count_visible_pairs(in.region, in.flags));
    }
}

#if defined(ENCAP_HAVE_AVX2)
TEST_CASE("AVX2 kernels are equivalent to scalar") {
    if (!kernels::avx2_available()) {
        MESSAGE("CPU lacks AVX2; skipping");
        return;
    }

    SUBCASE("pair counting, every tail length") {
        std::mt19937_64 rng(44);
        for (std::size_t n = 0; n <= 200; ++n) {
            const PairInput in = random_input(rng, n);
            CHECK(kernels::avx2::count_visible_pairs(in.region, in.flags) ==
                  kernels::scalar::count_visible_pairs(in.region, in.flags));
        }
    }

    SUBCASE("pair counting with non-boolean flag bytes") {
        PairInput in;
        for (std::uint32_t i = 0; i < 37; ++i) {
            in.region.push_back(i % 5);
            in.flags.push_back(static_cast<std::uint8_t>(i * 37));
        }
        CHECK(kernels::avx2::count_visible_pairs(in.region, in.flags) == naive_pairs(in));
    }

    SUBCASE("batch efficiency is bit-identical") {
        std::vector<double> n;
        std::vector<double> r;
        for (Count x : {2, 3, 7, 10, 50}) {
            for (Count k = 1; k <= 400; k += 3) {
                n.push_back(static_cast<double>(k * x));
                r.push_back(static_cast<double>(k));
            }
        }
        for (double p : {1.0, 2.0}) {
            std::vector<double> a(n.size());
            std::vector<double> b(n.size());
            kernels::scalar::config_efficiency_batch(n, r, p, a);
            kernels::avx2::config_efficiency_batch(n, r, p, b);
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(std::bit_cast<std::uint64_t>(a[i]) == std::bit_cast<std::uint64_t>(b[i]));
            }
        }
    }

    SUBCASE("batch efficiency on ragged lengths") {
        for (std::size_t len = 0; len <= 9; ++len) {
            std::vector<double> n(len);
            std::vector<double> r(len);
            for (std::size_t i = 0; i < len; ++i) {
                n[i] = 10.0 * static_cast<double>(i + 1);
                r[i] = static_cast<double>(i + 1);
            }
            std::vector<double> a(len);
            std::vector<double> b(len);
            kernels::scalar::config_efficiency_batch(n, r, 1.0, a);
            kernels::avx2::config_efficiency_batch(n, r, 1.0, b);
            CHECK(a == b);
        }
    }
}
#endif

TEST_CASE("batch efficiency matches the metrics-core formula") {
    std::vector<double> n;
    std::vector<double> r;
    for (Count k = 1; k <= 1000; ++k) {
        n.push_back(static_cast<double>(10 * k));
        r.push_back(static_cast<double>(k));
    }
    std::vector<double> out(n.size());
    kernels::config_efficiency_batch(n, r, 1.0, out);
    for (std::size_t i = 0; i < n.size(); ++i) {
        const auto sys = UniformSystem::make(static_cast<Count>(n[i]), static_cast<Count>(r[i]), 1);
        if (sys.n() == sys.p()) continue;
        CHECK(out[i] == config_efficiency(sys));
    }
}

TEST_CASE("kernels reject mismatched spans") {
    std::vector<std::uint32_t> region(4);
    std::vector<std::uint8_t> flags(3);
    CHECK_THROWS_AS(kernels::count_visible_pairs(region, flags), InvalidInput);
    std::vector<double> a(4);
    std::vector<double> b(5);
    CHECK_THROWS_AS(kernels::config_efficiency_batch(a, b, 1.0, a), InvalidInput);
}

TEST_CASE("requesting AVX2 on a machine without it is an error") {
    if (kernels::avx2_available()) return;
    std::vector<std::uint32_t> region(4);
    std::vector<std::uint8_t> flags(4);
    CHECK_THROWS_AS(kernels::count_visible_pairs(kernels::Isa::avx2, region, flags), InvalidInput);
}
