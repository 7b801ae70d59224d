#include "scgid/identifiability.hpp"

#include <stdexcept>

namespace scgid {

const char* to_string(Verdict v) { return v == Verdict::SId ? "SId" : "NotSId"; }

const char* to_string(Reason r) {
    switch (r) {
        case Reason::NoAdjacency: return "NoAdjacency";
        case Reason::DirectedEdge: return "DirectedEdge";
        case Reason::NoDoubleSelfLoop: return "NoDoubleSelfLoop";
        case Reason::UnshieldedCollider: return "UnshieldedCollider";
        case Reason::TheoremBlocked: return "TheoremBlocked";
    }
    return "?";
}

SIdReport s_identifiable(const Scg& scg, SeriesId x, SeriesId y) {
    SIdReport r{MacroPair::normalized(x, y), Verdict::SId, Reason::NoAdjacency};
    if (!adjacent(scg, x, y)) return r;
    if (!is_bidirected(scg, x, y)) {
        r.reason = Reason::DirectedEdge;
    } else if (!has_self_loop(scg, x) || !has_self_loop(scg, y)) {
        r.reason = Reason::NoDoubleSelfLoop;
    } else if (unshielded_collider_exists(scg, x, y)) {
        r.reason = Reason::UnshieldedCollider;
    } else {
        r.verdict = Verdict::NotSId;
        r.reason = Reason::TheoremBlocked;
    }
    return r;
}

std::vector<SIdReport> s_identifiable_all(const Scg& scg) {
    std::vector<SIdReport> out;
    for (std::uint32_t x = 0; x < scg.n_series(); ++x) {
        for (std::uint32_t y = x + 1; y < scg.n_series(); ++y) {
            out.push_back(s_identifiable(scg, SeriesId{x}, SeriesId{y}));
        }
    }
    return out;
}

namespace {

EffectCheck neighborhood_check(const Scg& scg, SeriesId center) {
    if (center.index >= scg.n_series()) throw std::out_of_range("series index outside SCG");
    EffectCheck out;
    for (auto z : neighbors(scg, center)) {
        auto r = s_identifiable(scg, center, z);
        if (r.verdict == Verdict::NotSId) {
            out.holds = false;
            out.blocking.push_back(r.pair);
        }
    }
    return out;
}

}  // namespace

EffectCheck total_effect_identifiable(const Scg& scg, SeriesId treatment) { return neighborhood_check(scg, treatment); }

EffectCheck cde_identifiable(const Scg& scg, SeriesId outcome) { return neighborhood_check(scg, outcome); }

}  // namespace scgid
