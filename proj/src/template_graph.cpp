#include "scgid/template_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scgid {

const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::Forward: return "forward";
        case Orientation::Backward: return "backward";
        case Orientation::Absent: return "absent";
        case Orientation::Undirected: return "undirected";
    }
    return "?";
}

bool lag_zero_acyclic(std::size_t n_series, std::span<const TemplateEdge> edges) {
    // Kahn's algorithm over the instantaneous subgraph.
    std::vector<std::vector<std::size_t>> out(n_series);
    std::vector<std::size_t> indegree(n_series, 0);
    for (const auto& e : edges) {
        if (e.lag != 0) continue;
        out[e.source.index].push_back(e.target.index);
        ++indegree[e.target.index];
    }
    std::vector<std::size_t> ready;
    for (std::size_t s = 0; s < n_series; ++s) {
        if (indegree[s] == 0) ready.push_back(s);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto s = ready.back();
        ready.pop_back();
        ++seen;
        for (auto t : out[s]) {
            if (--indegree[t] == 0) ready.push_back(t);
        }
    }
    return seen == n_series;
}

TemplateGraph::TemplateGraph(std::size_t n_series, std::vector<TemplateEdge> edges)
    : n_series_(n_series), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        if (e.source.index >= n_series_ || e.target.index >= n_series_) {
            throw std::invalid_argument("template edge references series outside [0, " + std::to_string(n_series_) +
                                        ")");
        }
        if (e.lag < 0) throw std::invalid_argument("template edge with negative lag");
        if (e.lag == 0 && e.source == e.target) {
            throw std::invalid_argument("instantaneous self-edge on series " + std::to_string(e.source.index));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (!lag_zero_acyclic(n_series_, edges_)) {
        throw std::invalid_argument("instantaneous (lag 0) edges form a cycle");
    }
    for (const auto& e : edges_) gamma_max_ = std::max(gamma_max_, e.lag);
}

bool TemplateGraph::contains(const TemplateEdge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool TemplateGraph::has_instantaneous_edges() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const TemplateEdge& e) { return e.lag == 0; });
}

}  // namespace scgid
