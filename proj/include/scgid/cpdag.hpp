#pragma once

#include "scgid/pdag.hpp"
#include "scgid/unrolled_graph.hpp"

namespace scgid {

/// Skeleton of a DAG as an all-undirected PDAG.
Pdag skeleton_of(const UnrolledGraph& g);

/// Essential graph of the Markov equivalence class of `g`: unshielded colliders
/// oriented, then closed under Meek rules 1-4. No temporal or summary knowledge.
Pdag dag_to_cpdag(const UnrolledGraph& g);

}  // namespace scgid
