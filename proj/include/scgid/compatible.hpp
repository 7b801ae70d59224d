#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scgid/scg.hpp"
#include "scgid/template_graph.hpp"

namespace scgid {

/// Deterministic stream of every template compatible with an SCG whose lags are <= gamma_max.
///
/// Each SCG edge (u, v) owns the lag slots {0..gamma_max} (self-loops: {1..gamma_max})
/// and picks a nonempty subset of them; SCG non-edges pick nothing. Candidates are
/// ordered lexicographically by the per-edge slot bitmask, edges in row-major order,
/// so candidate i decodes as a mixed-radix number. Candidates with a lag-0 cycle are skipped.
class CompatibleTemplates {
public:
    /// Throws std::invalid_argument when gamma_max < 1.
    CompatibleTemplates(Scg scg, int gamma_max);

    /// Number of candidates before the acyclicity filter (saturates at UINT64_MAX).
    std::uint64_t candidate_count() const { return candidates_; }
    /// Candidate `index`, or nullopt if its lag-0 edges are cyclic.
    std::optional<TemplateGraph> candidate(std::uint64_t index) const;

    /// Next valid template, or nullopt at the end of the stream.
    std::optional<TemplateGraph> next();
    void reset() { cursor_ = 0; }

    const Scg& scg() const { return scg_; }
    int gamma_max() const { return gamma_max_; }

private:
    struct Slotted {
        SeriesId source;
        SeriesId target;
        std::vector<int> lags;
    };

    Scg scg_;
    int gamma_max_;
    std::vector<Slotted> edges_;
    std::uint64_t candidates_ = 1;
    std::uint64_t cursor_ = 0;
};

std::vector<TemplateGraph> enumerate_compatible_templates(const Scg& scg, int gamma_max);

}  // namespace scgid
