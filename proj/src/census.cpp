#include "scgid/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace scgid {

CensusRow census(std::size_t n, const CensusOptions& opts) {
    if (n > 7) throw std::invalid_argument("census supports at most 7 series");
    if (n > 5 && !opts.allow_large) {
        throw std::invalid_argument("census for n = " + std::to_string(n) + " enumerates 2^" + std::to_string(n * n) +
                                    " graphs; pass the override to run it");
    }
    const auto nu = static_cast<unsigned>(n);
    const auto kernel = kernels::resolve(opts.kernel, nu);
    CensusRow row;
    row.n = n;
    row.total_scgs = std::uint64_t{1} << (n * n);

    const unsigned workers = std::max(1u, opts.workers);
    std::vector<std::uint64_t> partial(workers, 0);
    auto run = [&](unsigned w) {
        const std::uint64_t begin = row.total_scgs / workers * w + std::min<std::uint64_t>(w, row.total_scgs % workers);
        const std::uint64_t len = row.total_scgs / workers + (w < row.total_scgs % workers ? 1 : 0);
        partial[w] = kernels::count_blocked(kernel, nu, begin, begin + len);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (auto c : partial) row.not_fully_sid += c;
    row.percent = row.total_scgs ? 100.0 * static_cast<double>(row.not_fully_sid) / static_cast<double>(row.total_scgs) : 0.0;
    return row;
}

}  // namespace scgid
