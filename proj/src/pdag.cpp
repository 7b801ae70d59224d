#include "scgid/pdag.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scgid {

Pdag Pdag::complete(Window w) {
    Pdag p(w);
    const auto nv = w.vertex_count();
    for (VertexId a = 0; a < nv; ++a) {
        for (VertexId b = 0; b < nv; ++b) {
            if (a != b) p.at(a, b) = 1;
        }
    }
    return p;
}

void Pdag::add_undirected(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("Pdag: self edge");
    at(a, b) = 1;
    at(b, a) = 1;
}

void Pdag::add_directed(VertexId from, VertexId to) {
    if (from == to) throw std::invalid_argument("Pdag: self edge");
    at(from, to) = 1;
    at(to, from) = 0;
}

void Pdag::remove(VertexId a, VertexId b) {
    at(a, b) = 0;
    at(b, a) = 0;
}

bool Pdag::orient(VertexId from, VertexId to) {
    if (!adjacent(from, to)) {
        throw std::logic_error("Pdag::orient on absent edge " + std::to_string(from) + "-" + std::to_string(to));
    }
    if (!at(from, to)) {
        throw InconsistentOrientation("conflicting orientation for edge " + std::to_string(from) + "-" +
                                      std::to_string(to));
    }
    if (!at(to, from)) return false;
    at(to, from) = 0;
    return true;
}

std::vector<std::pair<VertexId, VertexId>> Pdag::directed_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId a = 0; a < vertex_count(); ++a) {
        for (VertexId b = 0; b < vertex_count(); ++b) {
            if (is_directed(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Pdag::undirected_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId a = 0; a < vertex_count(); ++a) {
        for (VertexId b = a + 1; b < vertex_count(); ++b) {
            if (is_undirected(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

std::size_t Pdag::undirected_count() const { return undirected_edges().size(); }

VertexList Pdag::neighbors(VertexId v) const {
    VertexList out;
    for (VertexId u = 0; u < vertex_count(); ++u) {
        if (u != v && adjacent(u, v)) out.push_back(u);
    }
    return out;
}

bool Pdag::same_from_slice(const Pdag& other, int from_slice) const {
    if (window_ != other.window_) return false;
    for (VertexId a = 0; a < vertex_count(); ++a) {
        for (VertexId b = 0; b < vertex_count(); ++b) {
            if (std::max(window_.slice_of(a), window_.slice_of(b)) < from_slice) continue;
            if (at(a, b) != other.at(a, b)) return false;
        }
    }
    return true;
}

Orientation orient_query(const Pdag& p, VertexId x, VertexId y) {
    if (x == y) throw std::invalid_argument("orient_query: x and y must differ");
    if (x >= p.vertex_count() || y >= p.vertex_count()) throw std::out_of_range("orient_query: vertex out of range");
    if (p.is_undirected(x, y)) return Orientation::Undirected;
    if (p.is_directed(x, y)) return Orientation::Forward;
    if (p.is_directed(y, x)) return Orientation::Backward;
    return Orientation::Absent;
}

Orientation orient_query(const Pdag& p, Vertex x, Vertex y) {
    return orient_query(p, p.window().id(x), p.window().id(y));
}

}  // namespace scgid
