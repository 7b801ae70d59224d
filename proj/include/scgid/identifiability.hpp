#pragma once

#include <vector>

#include "scgid/scg.hpp"

namespace scgid {

enum class Verdict { SId, NotSId };

/// Why a pair is (or is not) s-identifiable. Checked in declaration order;
/// the first matching reason is reported.
enum class Reason {
    NoAdjacency,         // no SCG edge between the series, so no micro edge
    DirectedEdge,        // one-directional SCG edge
    NoDoubleSelfLoop,    // bidirected, but at most one endpoint has a self-loop
    UnshieldedCollider,  // bidirected, both self-loops, a third series forms an unshielded collider
    TheoremBlocked,      // bidirected, both self-loops, no unshielded collider
};

const char* to_string(Verdict v);
const char* to_string(Reason r);

struct SIdReport {
    MacroPair pair;
    Verdict verdict = Verdict::SId;
    Reason reason = Reason::NoAdjacency;
};

/// Whether the instantaneous edge between x and y is oriented in every FT-MPDAG
/// compatible with the SCG.
SIdReport s_identifiable(const Scg& scg, SeriesId x, SeriesId y);

/// Reports for every unordered pair, in (x, y) lexicographic order.
std::vector<SIdReport> s_identifiable_all(const Scg& scg);

/// Outcome of a sufficient identifiability criterion. `holds == false` means the
/// criterion does not guarantee identifiability, not that the effect is unidentifiable.
struct EffectCheck {
    bool holds = true;
    std::vector<MacroPair> blocking;
};

/// Total effect of `treatment`: all pairs between the treatment and its SCG neighbors are s-identifiable.
EffectCheck total_effect_identifiable(const Scg& scg, SeriesId treatment);

/// Controlled direct effect on `outcome`: all pairs between the outcome and its SCG neighbors are s-identifiable.
EffectCheck cde_identifiable(const Scg& scg, SeriesId outcome);

}  // namespace scgid
