#pragma once

#include <optional>

#include "scgid/pdag.hpp"

namespace scgid {

enum class RuleSet { All, FirstOnly };

struct MeekOptions {
    RuleSet rules = RuleSet::All;
    /// When set, orienting an instantaneous edge at a slice >= this value orients
    /// every copy of it at slices >= this value the same way.
    std::optional<int> propagate_from_slice;
};

/// Orients from -> to (must be adjacent) and propagates it across slices per `opts`.
/// Throws InconsistentOrientation if the edge points the other way, if it would
/// close a directed cycle, or if it would create an unshielded collider.
/// Returns true if any mark changed.
bool orient_consistent(Pdag& p, VertexId from, VertexId to, const MeekOptions& opts);

/// Applies Meek rules (1-4, or rule 1 only) until no rule fires. Returns true if anything changed.
bool apply_meek_rules(Pdag& p, const MeekOptions& opts);

/// Closure of `p` under the Meek rules selected in `opts`. Never adds or removes adjacencies.
Pdag meek_closure(Pdag p, const MeekOptions& opts = {});

}  // namespace scgid
