#include <doctest.h>

#include "scgid/census.hpp"
#include "scgid/identifiability.hpp"

using namespace scgid;

namespace {

bool has_not_sid_pair(const Scg& s) {
    for (const auto& r : s_identifiable_all(s))
        if (r.verdict == Verdict::NotSId) return true;
    return false;
}

}  // namespace

TEST_CASE("bitmask kernel agrees with the graph-level verdicts") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
            REQUIRE(kernels::has_blocked_pair(m, n) == has_not_sid_pair(Scg::from_mask(n, m)));
        }
    }
}

TEST_CASE("AVX2 kernel matches the scalar kernel") {
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 not available on this CPU; skipping");
        return;
    }
    for (unsigned n = 1; n <= 4; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        CHECK(kernels::count_blocked_avx2(n, 0, total) == kernels::count_blocked_scalar(n, 0, total));
        // unaligned ranges exercise the scalar tail
        for (std::uint64_t b = 0; b < 9 && b < total; ++b)
            for (std::uint64_t e = b; e < b + 21 && e <= total; ++e)
                REQUIRE(kernels::count_blocked_avx2(n, b, e) == kernels::count_blocked_scalar(n, b, e));
    }
    // a slice of the n = 5 space, lane by lane
    for (std::uint64_t m = 0; m < (1u << 18); m += 8) {
        std::uint64_t lanes = 0;
        for (std::uint64_t i = 0; i < 8; ++i) lanes += kernels::has_blocked_pair(m * 97 + i, 5);
        REQUIRE(kernels::count_blocked_avx2(5, m * 97, m * 97 + 8) == lanes);
    }
    CHECK_THROWS_AS(kernels::count_blocked_avx2(6, 0, 8), std::invalid_argument);
}

TEST_CASE("kernel selection") {
    CHECK(kernels::resolve(kernels::Kernel::Scalar, 5) == kernels::Kernel::Scalar);
    CHECK(kernels::resolve(kernels::Kernel::Auto, 6) == kernels::Kernel::Scalar);
    if (kernels::avx2_available()) {
        CHECK(kernels::resolve(kernels::Kernel::Auto, 5) == kernels::Kernel::Avx2);
    } else {
        CHECK_THROWS_AS(kernels::resolve(kernels::Kernel::Avx2, 5), std::invalid_argument);
    }
}

TEST_CASE("census rows") {
    auto two = census(2);
    CHECK(two.total_scgs == 16);
    CHECK(two.not_fully_sid == 1);
    CHECK(two.percent == doctest::Approx(6.25));
    // the only blocked SCG on two series has every edge
    CHECK(kernels::has_blocked_pair(0xF, 2));
    for (std::uint64_t m = 0; m < 15; ++m) CHECK_FALSE(kernels::has_blocked_pair(m, 2));

    CHECK(census(3).total_scgs == 512);
    CHECK(census(4).total_scgs == 65536);
    CHECK_THROWS_AS(census(6), std::invalid_argument);
    CHECK_THROWS_AS(census(8, CensusOptions{1, true, kernels::Kernel::Auto}), std::invalid_argument);
}

TEST_CASE("census does not depend on workers or kernel") {
    for (std::size_t n : {3u, 4u}) {
        const auto ref = census(n, CensusOptions{1, false, kernels::Kernel::Scalar});
        for (unsigned w : {1u, 2u, 3u, 7u, 16u}) {
            for (auto k : {kernels::Kernel::Scalar, kernels::Kernel::Auto}) {
                auto row = census(n, CensusOptions{w, false, k});
                CHECK(row.not_fully_sid == ref.not_fully_sid);
                CHECK(row.total_scgs == ref.total_scgs);
            }
        }
    }
}
