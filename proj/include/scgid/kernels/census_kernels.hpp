#pragma once

#include <cstdint>

namespace scgid::kernels {

/// Whether the SCG packed row-major in `mask` has a pair that fails every
/// s-identifiability condition. Requires n <= 8.
bool has_blocked_pair(std::uint64_t mask, unsigned n);

/// Number of masks in [begin, end) with a blocked pair.
std::uint64_t count_blocked_scalar(unsigned n, std::uint64_t begin, std::uint64_t end);

/// AVX2 variant, eight masks per vector. Requires n <= 5 and avx2_available().
std::uint64_t count_blocked_avx2(unsigned n, std::uint64_t begin, std::uint64_t end);

bool avx2_compiled();
bool avx2_available();

enum class Kernel { Auto, Scalar, Avx2 };

const char* to_string(Kernel k);

/// Auto picks AVX2 when compiled in, supported by the CPU and n <= 5.
Kernel resolve(Kernel requested, unsigned n);

std::uint64_t count_blocked(Kernel k, unsigned n, std::uint64_t begin, std::uint64_t end);

}  // namespace scgid::kernels
