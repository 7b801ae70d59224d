#include "scgid/unrolled_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scgid {

UnrolledGraph unroll(const TemplateGraph& tmpl, std::size_t window_len) {
    const auto min_len = static_cast<std::size_t>(tmpl.gamma_max()) + 1;
    if (window_len < min_len) {
        throw std::invalid_argument("window length " + std::to_string(window_len) + " too small: need at least " +
                                    std::to_string(min_len) + " (gamma_max + 1)");
    }
    UnrolledGraph g;
    g.window_ = Window(tmpl.n_series(), window_len);
    g.template_ = tmpl;
    const auto nv = g.window_.vertex_count();
    g.adj_.assign(nv * nv, 0);
    g.parents_.assign(nv, {});
    g.children_.assign(nv, {});

    for (const auto& e : tmpl.edges()) {
        for (int k = e.lag; k < static_cast<int>(window_len); ++k) {
            auto from = g.window_.id(Vertex{e.source, k - e.lag});
            auto to = g.window_.id(Vertex{e.target, k});
            g.adj_[from * nv + to] = 1;
        }
    }
    for (VertexId u = 0; u < nv; ++u) {
        for (VertexId v = 0; v < nv; ++v) {
            if (g.adj_[u * nv + v]) {
                g.children_[u].push_back(v);
                g.parents_[v].push_back(u);
                ++g.edge_count_;
            }
        }
    }
    return g;
}

VertexList UnrolledGraph::descendants(VertexId v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex id out of range");
    std::vector<char> seen(vertex_count(), 0);
    VertexList stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto c : children_[u]) {
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
        }
    }
    VertexList out;
    for (VertexId u = 0; u < vertex_count(); ++u) {
        if (seen[u]) out.push_back(u);
    }
    return out;
}

VertexList UnrolledGraph::non_descendants(VertexId v) const {
    auto de = descendants(v);
    VertexList out;
    for (VertexId u = 0; u < vertex_count(); ++u) {
        if (!std::binary_search(de.begin(), de.end(), u)) out.push_back(u);
    }
    return out;
}

std::vector<Vertex> to_vertices(const Window& w, const VertexList& ids) {
    std::vector<Vertex> out;
    out.reserve(ids.size());
    for (auto id : ids) out.push_back(w.vertex(id));
    return out;
}

std::vector<Vertex> UnrolledGraph::parents(Vertex v) const { return to_vertices(window_, parents(window_.id(v))); }

std::vector<Vertex> UnrolledGraph::descendants(Vertex v) const {
    return to_vertices(window_, descendants(window_.id(v)));
}

std::vector<Vertex> UnrolledGraph::non_descendants(Vertex v) const {
    return to_vertices(window_, non_descendants(window_.id(v)));
}

std::vector<std::pair<VertexId, VertexId>> UnrolledGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (auto c : children_[u]) out.emplace_back(u, c);
    }
    return out;
}

}  // namespace scgid
