#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scgid/types.hpp"

namespace scgid {

/// Partially directed graph over the vertices of a window.
///
/// Edge marks are kept in an adjacency matrix: both (u,v) and (v,u) set means
/// u - v, only (u,v) set means u -> v.
class Pdag {
public:
    Pdag() = default;
    explicit Pdag(Window w) : window_(w), mark_(w.vertex_count() * w.vertex_count(), 0) {}

    /// Complete undirected graph over the window.
    static Pdag complete(Window w);

    const Window& window() const { return window_; }
    std::size_t vertex_count() const { return window_.vertex_count(); }

    bool adjacent(VertexId a, VertexId b) const { return at(a, b) || at(b, a); }
    bool is_directed(VertexId from, VertexId to) const { return at(from, to) && !at(to, from); }
    bool is_undirected(VertexId a, VertexId b) const { return at(a, b) && at(b, a); }
    /// True for from -> to and for from - to: the edge may point from `from` to `to`.
    bool has_mark(VertexId from, VertexId to) const { return at(from, to) != 0; }

    void add_undirected(VertexId a, VertexId b);
    void add_directed(VertexId from, VertexId to);
    void remove(VertexId a, VertexId b);
    /// Turns an existing edge into from -> to. Throws InconsistentOrientation
    /// if it is already directed the other way, std::logic_error if absent.
    /// Returns false if the edge was already from -> to.
    bool orient(VertexId from, VertexId to);

    std::vector<std::pair<VertexId, VertexId>> directed_edges() const;
    /// Undirected edges as (a, b) with a < b.
    std::vector<std::pair<VertexId, VertexId>> undirected_edges() const;
    std::size_t undirected_count() const;
    VertexList neighbors(VertexId v) const;

    /// Same skeleton and marks restricted to pairs whose later endpoint lies at slice >= from_slice.
    bool same_from_slice(const Pdag& other, int from_slice) const;

    bool operator==(const Pdag&) const = default;

private:
    std::uint8_t at(VertexId a, VertexId b) const { return mark_[a * window_.vertex_count() + b]; }
    std::uint8_t& at(VertexId a, VertexId b) { return mark_[a * window_.vertex_count() + b]; }

    Window window_;
    std::vector<std::uint8_t> mark_;
};

/// orient(x, y) on a PDAG.
Orientation orient_query(const Pdag& p, VertexId x, VertexId y);
Orientation orient_query(const Pdag& p, Vertex x, Vertex y);

}  // namespace scgid
