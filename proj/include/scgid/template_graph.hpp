#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "scgid/types.hpp"

namespace scgid {

/// Lagged micro edge: source at t - lag causes target at t.
struct TemplateEdge {
    SeriesId source;
    int lag = 0;
    SeriesId target;

    // stored order: (source, target, lag)
    friend constexpr std::strong_ordering operator<=>(const TemplateEdge& a, const TemplateEdge& b) {
        if (auto c = a.source <=> b.source; c != 0) return c;
        if (auto c = a.target <=> b.target; c != 0) return c;
        return a.lag <=> b.lag;
    }
    friend constexpr bool operator==(const TemplateEdge&, const TemplateEdge&) = default;
};

/// Stationary full-time DAG written as a finite set of lagged edges.
///
/// Construction sorts and deduplicates the edges and rejects negative lags,
/// instantaneous self-edges and cycles among the lag-0 edges.
class TemplateGraph {
public:
    TemplateGraph() = default;
    TemplateGraph(std::size_t n_series, std::vector<TemplateEdge> edges);

    std::size_t n_series() const { return n_series_; }
    int gamma_max() const { return gamma_max_; }
    std::span<const TemplateEdge> edges() const { return edges_; }
    bool contains(const TemplateEdge& e) const;
    bool has_instantaneous_edges() const;

    bool operator==(const TemplateGraph&) const = default;

private:
    std::size_t n_series_ = 0;
    int gamma_max_ = 0;
    std::vector<TemplateEdge> edges_;
};

/// True iff the lag-0 edges among the given ones form no directed cycle.
bool lag_zero_acyclic(std::size_t n_series, std::span<const TemplateEdge> edges);

}  // namespace scgid
