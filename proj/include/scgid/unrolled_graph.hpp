#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "scgid/template_graph.hpp"
#include "scgid/types.hpp"

namespace scgid {

/// Explicit DAG over a window of L slices obtained by repeating a template.
/// Slice 0 has a truncated past: edges whose source would precede it are dropped.
class UnrolledGraph {
public:
    const Window& window() const { return window_; }
    std::size_t n_series() const { return window_.n_series(); }
    std::size_t window_len() const { return window_.window_len(); }
    std::size_t vertex_count() const { return window_.vertex_count(); }
    const TemplateGraph& source() const { return template_; }

    bool has_edge(VertexId from, VertexId to) const { return adj_[from * vertex_count() + to] != 0; }
    bool adjacent(VertexId a, VertexId b) const { return has_edge(a, b) || has_edge(b, a); }

    const VertexList& parents(VertexId v) const { return parents_.at(v); }
    const VertexList& children(VertexId v) const { return children_.at(v); }
    /// Reflexive: v is its own descendant.
    VertexList descendants(VertexId v) const;
    VertexList non_descendants(VertexId v) const;

    std::vector<Vertex> parents(Vertex v) const;
    std::vector<Vertex> descendants(Vertex v) const;
    std::vector<Vertex> non_descendants(Vertex v) const;

    /// All edges as (from, to), sorted canonically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    std::size_t edge_count() const { return edge_count_; }

    bool operator==(const UnrolledGraph& o) const { return window_ == o.window_ && adj_ == o.adj_; }

private:
    friend UnrolledGraph unroll(const TemplateGraph& tmpl, std::size_t window_len);

    Window window_;
    TemplateGraph template_;
    std::vector<std::uint8_t> adj_;
    std::vector<VertexList> parents_;
    std::vector<VertexList> children_;
    std::size_t edge_count_ = 0;
};

/// Repeats every template edge (s, lag, s') as (s, k - lag) -> (s', k) for all k with k - lag >= 0.
/// Throws std::invalid_argument when window_len < gamma_max + 1.
UnrolledGraph unroll(const TemplateGraph& tmpl, std::size_t window_len);

std::vector<Vertex> to_vertices(const Window& w, const VertexList& ids);

}  // namespace scgid
