#include "scgid/compatible.hpp"

#include <limits>
#include <stdexcept>

namespace scgid {

CompatibleTemplates::CompatibleTemplates(Scg scg, int gamma_max) : scg_(std::move(scg)), gamma_max_(gamma_max) {
    if (gamma_max_ < 1) throw std::invalid_argument("compatible template enumeration needs gamma_max >= 1");
    const auto n = scg_.n_series();
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = 0; v < n; ++v) {
            if (!scg_.edge(SeriesId{u}, SeriesId{v})) continue;
            Slotted e{SeriesId{u}, SeriesId{v}, {}};
            for (int lag = (u == v ? 1 : 0); lag <= gamma_max_; ++lag) e.lags.push_back(lag);
            const std::uint64_t choices = (std::uint64_t{1} << e.lags.size()) - 1;
            if (candidates_ > std::numeric_limits<std::uint64_t>::max() / choices) {
                candidates_ = std::numeric_limits<std::uint64_t>::max();
            } else if (candidates_ != std::numeric_limits<std::uint64_t>::max()) {
                candidates_ *= choices;
            }
            edges_.push_back(std::move(e));
        }
    }
}

std::optional<TemplateGraph> CompatibleTemplates::candidate(std::uint64_t index) const {
    if (index >= candidates_) return std::nullopt;
    std::vector<TemplateEdge> out;
    // last edge varies fastest
    for (auto it = edges_.rbegin(); it != edges_.rend(); ++it) {
        const std::uint64_t choices = (std::uint64_t{1} << it->lags.size()) - 1;
        const std::uint64_t subset = index % choices + 1;
        index /= choices;
        for (std::size_t b = 0; b < it->lags.size(); ++b) {
            if (subset & (std::uint64_t{1} << b)) out.push_back(TemplateEdge{it->source, it->lags[b], it->target});
        }
    }
    if (!lag_zero_acyclic(scg_.n_series(), out)) return std::nullopt;
    return TemplateGraph(scg_.n_series(), std::move(out));
}

std::optional<TemplateGraph> CompatibleTemplates::next() {
    while (cursor_ < candidates_) {
        if (auto t = candidate(cursor_++)) return t;
    }
    return std::nullopt;
}

std::vector<TemplateGraph> enumerate_compatible_templates(const Scg& scg, int gamma_max) {
    CompatibleTemplates stream(scg, gamma_max);
    std::vector<TemplateGraph> out;
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

}  // namespace scgid
