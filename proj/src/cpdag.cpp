#include "scgid/cpdag.hpp"

#include "scgid/meek.hpp"

namespace scgid {

Pdag skeleton_of(const UnrolledGraph& g) {
    Pdag p(g.window());
    for (const auto& [u, v] : g.edges()) p.add_undirected(u, v);
    return p;
}

Pdag dag_to_cpdag(const UnrolledGraph& g) {
    Pdag p = skeleton_of(g);
    for (VertexId c = 0; c < g.vertex_count(); ++c) {
        const auto& pa = g.parents(c);
        for (std::size_t i = 0; i < pa.size(); ++i) {
            for (std::size_t j = i + 1; j < pa.size(); ++j) {
                if (!g.adjacent(pa[i], pa[j])) {
                    p.orient(pa[i], c);
                    p.orient(pa[j], c);
                }
            }
        }
    }
    apply_meek_rules(p, MeekOptions{});
    return p;
}

}  // namespace scgid
