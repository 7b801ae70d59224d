#include "scgid/meek.hpp"

#include <string>
#include <vector>

namespace scgid {
namespace {

bool directed_path(const Pdag& p, VertexId from, VertexId to) {
    std::vector<char> seen(p.vertex_count(), 0);
    std::vector<VertexId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        if (u == to) return true;
        for (VertexId w = 0; w < p.vertex_count(); ++w) {
            if (!seen[w] && p.is_directed(u, w)) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

std::string edge_name(const Pdag& p, VertexId a, VertexId b) {
    auto va = p.window().vertex(a);
    auto vb = p.window().vertex(b);
    return "(" + std::to_string(va.series.index) + "," + std::to_string(va.slice) + ")->(" +
           std::to_string(vb.series.index) + "," + std::to_string(vb.slice) + ")";
}

bool orient_one(Pdag& p, VertexId from, VertexId to) {
    if (p.is_directed(from, to)) return false;
    if (p.is_directed(to, from)) {
        throw InconsistentOrientation("edge " + edge_name(p, to, from) + " already oriented, cannot reverse");
    }
    if (directed_path(p, to, from)) {
        throw InconsistentOrientation("orienting " + edge_name(p, from, to) + " closes a directed cycle");
    }
    for (VertexId w = 0; w < p.vertex_count(); ++w) {
        if (w != from && p.is_directed(w, to) && !p.adjacent(w, from)) {
            throw InconsistentOrientation("orienting " + edge_name(p, from, to) + " creates an unshielded collider");
        }
    }
    return p.orient(from, to);
}

// Rule 1: c -> a - b, c and b nonadjacent.
bool rule1(const Pdag& p, VertexId a, VertexId b) {
    for (VertexId c = 0; c < p.vertex_count(); ++c) {
        if (c != b && p.is_directed(c, a) && !p.adjacent(c, b)) return true;
    }
    return false;
}

// Rule 2: a -> c -> b with a - b.
bool rule2(const Pdag& p, VertexId a, VertexId b) {
    for (VertexId c = 0; c < p.vertex_count(); ++c) {
        if (p.is_directed(a, c) && p.is_directed(c, b)) return true;
    }
    return false;
}

// Rule 3: a - c -> b, a - d -> b, c and d nonadjacent.
bool rule3(const Pdag& p, VertexId a, VertexId b) {
    const auto nv = p.vertex_count();
    for (VertexId c = 0; c < nv; ++c) {
        if (!p.is_undirected(a, c) || !p.is_directed(c, b)) continue;
        for (VertexId d = c + 1; d < nv; ++d) {
            if (p.is_undirected(a, d) && p.is_directed(d, b) && !p.adjacent(c, d)) return true;
        }
    }
    return false;
}

// Rule 4: a - c -> d -> b, a adjacent to d, c and b nonadjacent.
bool rule4(const Pdag& p, VertexId a, VertexId b) {
    const auto nv = p.vertex_count();
    for (VertexId c = 0; c < nv; ++c) {
        if (c == b || !p.is_undirected(a, c) || p.adjacent(c, b)) continue;
        for (VertexId d = 0; d < nv; ++d) {
            if (d != a && p.is_directed(c, d) && p.is_directed(d, b) && p.adjacent(a, d)) return true;
        }
    }
    return false;
}

}  // namespace

bool orient_consistent(Pdag& p, VertexId from, VertexId to, const MeekOptions& opts) {
    bool changed = orient_one(p, from, to);
    const auto& w = p.window();
    const int slice = w.slice_of(from);
    if (!opts.propagate_from_slice || slice != w.slice_of(to) || slice < *opts.propagate_from_slice) {
        return changed;
    }
    const auto s_from = w.series_of(from);
    const auto s_to = w.series_of(to);
    for (int k = *opts.propagate_from_slice; k < static_cast<int>(w.window_len()); ++k) {
        if (k == slice) continue;
        auto a = w.id(Vertex{s_from, k});
        auto b = w.id(Vertex{s_to, k});
        if (!p.adjacent(a, b)) continue;
        changed = orient_one(p, a, b) || changed;
    }
    return changed;
}

bool apply_meek_rules(Pdag& p, const MeekOptions& opts) {
    bool any = false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [u, v] : p.undirected_edges()) {
            for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                if (!p.is_undirected(a, b)) break;
                bool fire = rule1(p, a, b);
                if (!fire && opts.rules == RuleSet::All) {
                    fire = rule2(p, a, b) || rule3(p, a, b) || rule4(p, a, b);
                }
                if (fire) {
                    changed = orient_consistent(p, a, b, opts) || changed;
                    break;
                }
            }
        }
        any = any || changed;
    }
    return any;
}

Pdag meek_closure(Pdag p, const MeekOptions& opts) {
    apply_meek_rules(p, opts);
    return p;
}

}  // namespace scgid
