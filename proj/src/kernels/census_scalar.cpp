#include "scgid/kernels/census_kernels.hpp"

#include <stdexcept>

namespace scgid::kernels {

bool has_blocked_pair(std::uint64_t mask, unsigned n) {
    if (n > 8) throw std::invalid_argument("census kernels support at most 8 series");
    const std::uint32_t full = (1u << n) - 1;
    std::uint32_t row[8], col[8];
    for (unsigned i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>(mask >> (i * n)) & full;
    for (unsigned i = 0; i < n; ++i) {
        col[i] = 0;
        for (unsigned j = 0; j < n; ++j) col[i] |= ((row[j] >> i) & 1u) << j;
    }
    for (unsigned x = 0; x < n; ++x) {
        for (unsigned y = x + 1; y < n; ++y) {
            const std::uint32_t need = (1u << x) | (1u << y);
            if ((row[x] & need) != need || (row[y] & need) != need) continue;
            // bits x and y are always in both neighborhoods here
            const std::uint32_t nx = row[x] | col[x];
            const std::uint32_t ny = row[y] | col[y];
            if (((col[y] & ~nx) | (col[x] & ~ny)) == 0) return true;
        }
    }
    return false;
}

std::uint64_t count_blocked_scalar(unsigned n, std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (std::uint64_t m = begin; m < end; ++m) count += has_blocked_pair(m, n) ? 1 : 0;
    return count;
}

const char* to_string(Kernel k) {
    switch (k) {
        case Kernel::Auto: return "auto";
        case Kernel::Scalar: return "scalar";
        case Kernel::Avx2: return "avx2";
    }
    return "?";
}

Kernel resolve(Kernel requested, unsigned n) {
    if (requested == Kernel::Auto) return avx2_available() && n <= 5 ? Kernel::Avx2 : Kernel::Scalar;
    if (requested == Kernel::Avx2 && (!avx2_available() || n > 5)) {
        throw std::invalid_argument("AVX2 census kernel unavailable for this CPU or n");
    }
    return requested;
}

std::uint64_t count_blocked(Kernel k, unsigned n, std::uint64_t begin, std::uint64_t end) {
    return resolve(k, n) == Kernel::Avx2 ? count_blocked_avx2(n, begin, end) : count_blocked_scalar(n, begin, end);
}

}  // namespace scgid::kernels
