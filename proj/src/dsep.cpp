#include "scgid/dsep.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace scgid {

bool d_separated(const UnrolledGraph& g, VertexId x, VertexId y, std::span<const VertexId> z) {
    const auto nv = g.vertex_count();
    if (x >= nv || y >= nv) throw std::out_of_range("d_separated: vertex out of range");
    if (x == y) throw std::invalid_argument("d_separated: x and y must differ");

    std::vector<char> in_z(nv, 0);
    for (auto v : z) {
        if (v >= nv) throw std::out_of_range("d_separated: conditioning vertex out of range");
        in_z[v] = 1;
    }
    if (in_z[x] || in_z[y]) throw std::invalid_argument("d_separated: endpoint inside conditioning set");

    // Vertices that are in z or have a descendant in z.
    std::vector<char> anc_z(nv, 0);
    std::vector<VertexId> stack(z.begin(), z.end());
    for (auto v : z) anc_z[v] = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto p : g.parents(v)) {
            if (!anc_z[p]) {
                anc_z[p] = 1;
                stack.push_back(p);
            }
        }
    }

    // state 0: entered from a child (moving up), state 1: entered from a parent (moving down)
    std::vector<char> visited(2 * nv, 0);
    std::vector<std::pair<VertexId, int>> todo{{x, 0}};
    while (!todo.empty()) {
        auto [v, dir] = todo.back();
        todo.pop_back();
        if (visited[2 * v + dir]) continue;
        visited[2 * v + dir] = 1;
        if (v == y) return false;

        if (dir == 0) {
            if (in_z[v]) continue;
            for (auto p : g.parents(v)) todo.emplace_back(p, 0);
            for (auto c : g.children(v)) todo.emplace_back(c, 1);
        } else {
            if (!in_z[v]) {
                for (auto c : g.children(v)) todo.emplace_back(c, 1);
            }
            if (anc_z[v]) {
                for (auto p : g.parents(v)) todo.emplace_back(p, 0);
            }
        }
    }
    return true;
}

bool d_separated(const UnrolledGraph& g, Vertex x, Vertex y, std::span<const Vertex> z) {
    std::vector<VertexId> ids;
    ids.reserve(z.size());
    for (const auto& v : z) ids.push_back(g.window().id(v));
    return d_separated(g, g.window().id(x), g.window().id(y), ids);
}

}  // namespace scgid
