#include "scgid/kernels/census_kernels.hpp"

#include <stdexcept>

#if defined(SCGID_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace scgid::kernels {

#if defined(SCGID_HAVE_AVX2)

bool avx2_compiled() { return true; }

bool avx2_available() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

namespace {

__attribute__((target("avx2"))) __m256i blocked_lanes(__m256i m, unsigned n) {
    const __m256i full = _mm256_set1_epi32(static_cast<int>((1u << n) - 1));
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i zero = _mm256_setzero_si256();
    __m256i row[5], col[5];
    for (unsigned i = 0; i < n; ++i) {
        row[i] = _mm256_and_si256(_mm256_srl_epi32(m, _mm_cvtsi32_si128(static_cast<int>(i * n))), full);
    }
    for (unsigned i = 0; i < n; ++i) {
        col[i] = zero;
        const __m128i si = _mm_cvtsi32_si128(static_cast<int>(i));
        for (unsigned j = 0; j < n; ++j) {
            __m256i bit = _mm256_and_si256(_mm256_srl_epi32(row[j], si), one);
            col[i] = _mm256_or_si256(col[i], _mm256_sll_epi32(bit, _mm_cvtsi32_si128(static_cast<int>(j))));
        }
    }
    __m256i any = zero;
    for (unsigned x = 0; x < n; ++x) {
        for (unsigned y = x + 1; y < n; ++y) {
            const __m256i need = _mm256_set1_epi32(static_cast<int>((1u << x) | (1u << y)));
            __m256i ok = _mm256_and_si256(_mm256_cmpeq_epi32(_mm256_and_si256(row[x], need), need),
                                          _mm256_cmpeq_epi32(_mm256_and_si256(row[y], need), need));
            __m256i nx = _mm256_or_si256(row[x], col[x]);
            __m256i ny = _mm256_or_si256(row[y], col[y]);
            __m256i rescue = _mm256_or_si256(_mm256_andnot_si256(nx, col[y]), _mm256_andnot_si256(ny, col[x]));
            any = _mm256_or_si256(any, _mm256_and_si256(ok, _mm256_cmpeq_epi32(rescue, zero)));
        }
    }
    return any;
}

}  // namespace

__attribute__((target("avx2"))) std::uint64_t count_blocked_avx2(unsigned n, std::uint64_t begin,
                                                                 std::uint64_t end) {
    if (n > 5) throw std::invalid_argument("AVX2 census kernel supports at most 5 series");
    std::uint64_t count = 0;
    std::uint64_t m = begin;
    const __m256i step = _mm256_set1_epi32(8);
    __m256i lanes = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(m)), _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
    for (; m + 8 <= end; m += 8) {
        __m256i b = blocked_lanes(lanes, n);
        count += static_cast<std::uint64_t>(__builtin_popcount(_mm256_movemask_ps(_mm256_castsi256_ps(b))));
        lanes = _mm256_add_epi32(lanes, step);
    }
    return count + count_blocked_scalar(n, m, end);
}

#else

bool avx2_compiled() { return false; }
bool avx2_available() { return false; }

std::uint64_t count_blocked_avx2(unsigned, std::uint64_t, std::uint64_t) {
    throw std::logic_error("AVX2 census kernel not compiled in");
}

#endif

}  // namespace scgid::kernels
