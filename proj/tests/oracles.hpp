#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "scgid/pdag.hpp"
#include "scgid/scg.hpp"
#include "scgid/template_graph.hpp"
#include "scgid/unrolled_graph.hpp"

namespace oracle {

using scgid::VertexId;
using scgid::VertexList;

/// Simple paths between x and y in the skeleton of g.
inline std::vector<VertexList> simple_paths(const scgid::UnrolledGraph& g, VertexId x, VertexId y) {
    std::vector<VertexList> out;
    VertexList path{x};
    std::vector<bool> on(g.vertex_count(), false);
    on[x] = true;
    std::function<void(VertexId)> dfs = [&](VertexId u) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (on[v] || !g.adjacent(u, v)) continue;
            path.push_back(v);
            if (v == y) {
                out.push_back(path);
            } else {
                on[v] = true;
                dfs(v);
                on[v] = false;
            }
            path.pop_back();
        }
    };
    dfs(x);
    return out;
}

/// Per-vertex descendant bitsets (reflexive), n <= 64.
inline std::vector<std::uint64_t> descendant_masks(const scgid::UnrolledGraph& g) {
    std::vector<std::uint64_t> out(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (auto d : g.descendants(v)) out[v] |= std::uint64_t{1} << d;
    }
    return out;
}

/// A path is active given z when every collider on it has a descendant in z
/// and no non-collider is in z.
inline bool path_active(const scgid::UnrolledGraph& g, const VertexList& path, std::uint64_t zmask,
                        const std::vector<std::uint64_t>& desc) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const auto a = path[i - 1], m = path[i], b = path[i + 1];
        const bool collider = g.has_edge(a, m) && g.has_edge(b, m);
        if (collider) {
            if ((desc[m] & zmask) == 0) return false;
        } else if (zmask >> m & 1) {
            return false;
        }
    }
    return true;
}

inline bool d_separated_by_paths(const scgid::UnrolledGraph& g, VertexId x, VertexId y, const VertexList& z) {
    std::uint64_t zmask = 0;
    for (auto v : z) zmask |= std::uint64_t{1} << v;
    auto desc = descendant_masks(g);
    for (const auto& p : simple_paths(g, x, y)) {
        if (path_active(g, p, zmask, desc)) return false;
    }
    return true;
}

using EdgeSet = std::set<std::pair<VertexId, VertexId>>;

inline EdgeSet unshielded_colliders(std::size_t nv, const EdgeSet& dag) {
    auto has = [&](VertexId a, VertexId b) { return dag.count({a, b}) > 0; };
    EdgeSet out;  // encoded as (min(a,b) * nv + max(a,b), c)
    for (VertexId c = 0; c < nv; ++c) {
        for (VertexId a = 0; a < nv; ++a) {
            for (VertexId b = a + 1; b < nv; ++b) {
                if (has(a, c) && has(b, c) && !has(a, b) && !has(b, a)) out.insert({a * nv + b, c});
            }
        }
    }
    return out;
}

inline bool acyclic(std::size_t nv, const EdgeSet& dag) {
    std::vector<int> indeg(nv, 0);
    for (auto [a, b] : dag) ++indeg[b];
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < nv; ++v)
        if (!indeg[v]) stack.push_back(v);
    std::size_t seen = 0;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        ++seen;
        for (auto [a, b] : dag)
            if (a == v && --indeg[b] == 0) stack.push_back(b);
    }
    return seen == nv;
}

/// Every DAG with the skeleton and unshielded colliders of g (its Markov equivalence class).
inline std::vector<EdgeSet> markov_equivalence_class(const scgid::UnrolledGraph& g) {
    const auto nv = g.vertex_count();
    auto edges = g.edges();
    EdgeSet truth(edges.begin(), edges.end());
    const auto colliders = unshielded_colliders(nv, truth);
    std::vector<EdgeSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges.size()); ++bits) {
        EdgeSet d;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [a, b] = edges[i];
            d.insert(bits >> i & 1 ? std::pair{b, a} : std::pair{a, b});
        }
        if (acyclic(nv, d) && unshielded_colliders(nv, d) == colliders) out.push_back(d);
    }
    return out;
}

/// Every template over n series with lags <= gamma whose instantaneous part is acyclic.
inline std::vector<scgid::TemplateGraph> all_templates(std::size_t n, int gamma) {
    std::vector<scgid::TemplateEdge> slots;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
            for (int lag = 0; lag <= gamma; ++lag)
                if (!(lag == 0 && u == v)) slots.push_back({scgid::SeriesId{u}, lag, scgid::SeriesId{v}});
    std::vector<scgid::TemplateGraph> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
        std::vector<scgid::TemplateEdge> e;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (bits >> i & 1) e.push_back(slots[i]);
        if (scgid::lag_zero_acyclic(n, e)) out.emplace_back(n, std::move(e));
    }
    return out;
}

/// Random template: each slot present with probability p, lag-0 cycles broken by
/// keeping only instantaneous edges that go up in a random series order.
inline scgid::TemplateGraph random_template(std::mt19937& rng, std::size_t n, int gamma, double p) {
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
    std::bernoulli_distribution coin(p);
    std::vector<scgid::TemplateEdge> e;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
            for (int lag = 0; lag <= gamma; ++lag) {
                if (lag == 0 && rank[u] >= rank[v]) continue;
                if (coin(rng)) e.push_back({scgid::SeriesId{u}, lag, scgid::SeriesId{v}});
            }
    return scgid::TemplateGraph(n, std::move(e));
}

/// Orientation of (x, y) between slices >= from, as comparable tuples.
inline std::vector<scgid::Orientation> interior_orientations(const scgid::Pdag& p, int from) {
    const auto& w = p.window();
    std::vector<scgid::Orientation> out;
    for (VertexId u = 0; u < p.vertex_count(); ++u)
        for (VertexId v = u + 1; v < p.vertex_count(); ++v)
            if (std::max(w.slice_of(u), w.slice_of(v)) >= from) out.push_back(scgid::orient_query(p, u, v));
    return out;
}

}  // namespace oracle
