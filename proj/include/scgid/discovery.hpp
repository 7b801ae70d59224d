#pragma once

#include <cstddef>

#include "scgid/meek.hpp"
#include "scgid/pdag.hpp"
#include "scgid/scg.hpp"
#include "scgid/template_graph.hpp"
#include "scgid/unrolled_graph.hpp"

namespace scgid {

struct DiscoveryOptions {
    RuleSet rules = RuleSet::All;
    /// Copy orientations of instantaneous edges across interior slices.
    bool stationarity_propagation = true;
};

/// Window used when none is given: 2 * (gamma_max + 1) + 1 slices.
std::size_t default_window_len(int gamma_max);

/// Slices >= gamma_max see their full lagged past; correctness claims hold there.
inline int first_interior_slice(int gamma_max) { return gamma_max; }

/// Orients every lagged edge past -> present and every instantaneous edge X_k - Y_k
/// with X -> Y but not Y -> X in the SCG. Only touches existing adjacencies.
void orient_by_background(Pdag& p, const Scg& scg);

/// The summary-graph contradiction rule at slices >= from_slice: an undirected X_k - Y_k
/// with X -> Y in the SCG and no directed edge from any X vertex into Y_k becomes X_k -> Y_k.
/// Returns true if anything was oriented.
bool apply_scg_rule(Pdag& p, const Scg& scg, int from_slice, const DiscoveryOptions& opts = {});

/// Alternates Meek closure and the SCG rule until neither changes the graph.
void close_orientations(Pdag& p, const Scg& scg, int gamma_max, const DiscoveryOptions& opts = {});

/// Oracle temporal PC with SCG background knowledge. Independence queries are
/// answered by d-separation in `truth`. Throws std::invalid_argument if
/// `scg` is not the SCG of `truth`'s template.
Pdag tpc(const UnrolledGraph& truth, const Scg& scg, const DiscoveryOptions& opts = {});

/// FT-MPDAG computed from the Markov equivalence class: CPDAG of the unrolled
/// template plus lag and SCG orientations, then closure. Throws
/// std::invalid_argument when the template is not compatible with the SCG.
Pdag ftmpdag_of(const TemplateGraph& tmpl, const Scg& scg, std::size_t window_len,
                const DiscoveryOptions& opts = {});

}  // namespace scgid
