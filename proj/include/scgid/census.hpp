#pragma once

#include <cstddef>
#include <cstdint>

#include "scgid/kernels/census_kernels.hpp"

namespace scgid {

struct CensusRow {
    std::size_t n = 0;
    std::uint64_t total_scgs = 0;
    std::uint64_t not_fully_sid = 0;
    double percent = 0.0;
};

struct CensusOptions {
    unsigned workers = 1;
    /// Permit n > 5 (2^(n*n) masks; n = 6 already means 6.9e10 graphs).
    bool allow_large = false;
    kernels::Kernel kernel = kernels::Kernel::Auto;
};

/// Counts SCGs on n labeled series that contain a pair which is not s-identifiable.
CensusRow census(std::size_t n, const CensusOptions& opts = {});

}  // namespace scgid
