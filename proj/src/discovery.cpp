#include "scgid/discovery.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "scgid/cpdag.hpp"
#include "scgid/dsep.hpp"

namespace scgid {
namespace {

MeekOptions meek_options(int gamma_max, const DiscoveryOptions& opts) {
    MeekOptions m;
    m.rules = opts.rules;
    if (opts.stationarity_propagation) m.propagate_from_slice = first_interior_slice(gamma_max);
    return m;
}

// Calls fn on each size-k subset of items in lexicographic order until fn returns true.
template <class Fn>
bool for_each_subset(const VertexList& items, std::size_t k, Fn&& fn) {
    if (k > items.size()) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    VertexList subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
        if (fn(subset)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

using SepsetMap = std::map<std::pair<VertexId, VertexId>, VertexList>;

SepsetMap prune_skeleton(Pdag& p, const UnrolledGraph& truth) {
    const auto& w = p.window();
    const auto nv = p.vertex_count();
    SepsetMap sepsets;
    for (std::size_t level = 0;; ++level) {
        bool testable = false;
        for (VertexId u = 0; u < nv; ++u) {
            for (VertexId v = u + 1; v < nv; ++v) {
                if (!p.adjacent(u, v)) continue;
                const int latest = std::max(w.slice_of(u), w.slice_of(v));
                for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                    VertexList candidates;
                    for (auto c : p.neighbors(a)) {
                        if (c != b && w.slice_of(c) <= latest) candidates.push_back(c);
                    }
                    if (candidates.size() < level) continue;
                    testable = true;
                    bool removed = for_each_subset(candidates, level, [&](const VertexList& z) {
                        if (!d_separated(truth, u, v, z)) return false;
                        p.remove(u, v);
                        sepsets[{u, v}] = z;
                        return true;
                    });
                    if (removed) break;
                }
            }
        }
        if (!testable) break;
    }
    return sepsets;
}

void orient_colliders(Pdag& p, const SepsetMap& sepsets) {
    const auto nv = p.vertex_count();
    for (VertexId c = 0; c < nv; ++c) {
        auto nb = p.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                auto a = nb[i], b = nb[j];
                if (p.adjacent(a, b)) continue;
                auto it = sepsets.find({std::min(a, b), std::max(a, b)});
                if (it == sepsets.end()) throw std::logic_error("nonadjacent pair without separating set");
                if (std::find(it->second.begin(), it->second.end(), c) != it->second.end()) continue;
                p.orient(a, c);
                p.orient(b, c);
            }
        }
    }
}

}  // namespace

std::size_t default_window_len(int gamma_max) { return 2 * (static_cast<std::size_t>(gamma_max) + 1) + 1; }

void orient_by_background(Pdag& p, const Scg& scg) {
    const auto& w = p.window();
    const auto nv = p.vertex_count();
    for (VertexId a = 0; a < nv; ++a) {
        for (VertexId b = 0; b < nv; ++b) {
            if (a == b || !p.adjacent(a, b)) continue;
            const int sa = w.slice_of(a), sb = w.slice_of(b);
            if (sa < sb) {
                p.orient(a, b);
            } else if (sa == sb) {
                auto xa = w.series_of(a), xb = w.series_of(b);
                if (scg.edge(xa, xb) && !scg.edge(xb, xa)) p.orient(a, b);
            }
        }
    }
}

bool apply_scg_rule(Pdag& p, const Scg& scg, int from_slice, const DiscoveryOptions& opts) {
    const auto& w = p.window();
    const auto n = w.n_series();
    MeekOptions m;
    m.rules = opts.rules;
    if (opts.stationarity_propagation) m.propagate_from_slice = from_slice;
    bool changed = false;
    for (int k = std::max(from_slice, 0); k < static_cast<int>(w.window_len()); ++k) {
        for (std::uint32_t sx = 0; sx < n; ++sx) {
            for (std::uint32_t sy = 0; sy < n; ++sy) {
                if (sx == sy || !scg.edge(SeriesId{sx}, SeriesId{sy})) continue;
                auto x = w.id(Vertex{SeriesId{sx}, k});
                auto y = w.id(Vertex{SeriesId{sy}, k});
                if (!p.is_undirected(x, y)) continue;
                bool witnessed = false;
                for (int j = 0; j <= k && !witnessed; ++j) {
                    witnessed = p.is_directed(w.id(Vertex{SeriesId{sx}, j}), y);
                }
                if (!witnessed) changed = orient_consistent(p, x, y, m) || changed;
            }
        }
    }
    return changed;
}

void close_orientations(Pdag& p, const Scg& scg, int gamma_max, const DiscoveryOptions& opts) {
    const auto m = meek_options(gamma_max, opts);
    const int from = first_interior_slice(gamma_max);
    while (true) {
        apply_meek_rules(p, m);
        if (!apply_scg_rule(p, scg, from, opts)) break;
    }
}

Pdag tpc(const UnrolledGraph& truth, const Scg& scg, const DiscoveryOptions& opts) {
    if (!compatible(scg, truth.source())) {
        throw std::invalid_argument("tpc: SCG is not the summary graph of the ground-truth template");
    }
    Pdag p = Pdag::complete(truth.window());
    orient_by_background(p, scg);
    auto sepsets = prune_skeleton(p, truth);
    orient_colliders(p, sepsets);
    close_orientations(p, scg, truth.source().gamma_max(), opts);
    return p;
}

Pdag ftmpdag_of(const TemplateGraph& tmpl, const Scg& scg, std::size_t window_len, const DiscoveryOptions& opts) {
    if (!compatible(scg, tmpl)) {
        throw std::invalid_argument("ftmpdag_of: template is not compatible with the SCG");
    }
    auto g = unroll(tmpl, window_len);
    Pdag p = dag_to_cpdag(g);
    orient_by_background(p, scg);
    close_orientations(p, scg, tmpl.gamma_max(), opts);
    return p;
}

}  // namespace scgid
