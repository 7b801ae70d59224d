#include "scgid/scg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scgid {

Scg Scg::from_mask(std::size_t n_series, std::uint64_t mask) {
    if (n_series > 8) throw std::invalid_argument("Scg::from_mask supports at most 8 series");
    Scg s(n_series);
    for (std::size_t u = 0; u < n_series; ++u) {
        for (std::size_t v = 0; v < n_series; ++v) {
            s.adj_[u * n_series + v] = static_cast<std::uint8_t>((mask >> (u * n_series + v)) & 1u);
        }
    }
    return s;
}

std::uint64_t Scg::mask() const {
    if (n_ > 8) throw std::invalid_argument("Scg::mask supports at most 8 series");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        if (adj_[i]) m |= std::uint64_t{1} << i;
    }
    return m;
}

std::size_t Scg::index(SeriesId from, SeriesId to) const {
    if (from.index >= n_ || to.index >= n_) {
        throw std::out_of_range("series index outside SCG of size " + std::to_string(n_));
    }
    return from.index * n_ + to.index;
}

std::size_t Scg::edge_count() const { return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)); }

MacroPair MacroPair::normalized(SeriesId a, SeriesId b) {
    if (a == b) throw std::invalid_argument("macro pair needs two distinct series");
    return a < b ? MacroPair{a, b} : MacroPair{b, a};
}

Scg scg_of(const TemplateGraph& tmpl) {
    Scg s(tmpl.n_series());
    for (const auto& e : tmpl.edges()) s.set_edge(e.source, e.target);
    return s;
}

bool is_bidirected(const Scg& scg, SeriesId x, SeriesId y) { return scg.edge(x, y) && scg.edge(y, x); }

bool has_self_loop(const Scg& scg, SeriesId x) { return scg.edge(x, x); }

bool adjacent(const Scg& scg, SeriesId x, SeriesId y) { return scg.edge(x, y) || scg.edge(y, x); }

std::vector<SeriesId> neighbors(const Scg& scg, SeriesId x) {
    std::vector<SeriesId> out;
    for (std::uint32_t z = 0; z < scg.n_series(); ++z) {
        SeriesId s{z};
        if (s != x && adjacent(scg, x, s)) out.push_back(s);
    }
    return out;
}

bool unshielded_collider_exists(const Scg& scg, SeriesId x, SeriesId y) {
    if (x == y) throw std::invalid_argument("unshielded_collider_exists: x and y must differ");
    for (std::uint32_t i = 0; i < scg.n_series(); ++i) {
        SeriesId z{i};
        if (z == x || z == y) continue;
        if (scg.edge(z, y) && !adjacent(scg, z, x)) return true;
        if (scg.edge(z, x) && !adjacent(scg, z, y)) return true;
    }
    return false;
}

bool compatible(const Scg& scg, const TemplateGraph& tmpl) {
    if (scg.n_series() != tmpl.n_series()) {
        throw std::invalid_argument("SCG has " + std::to_string(scg.n_series()) + " series, template has " +
                                    std::to_string(tmpl.n_series()));
    }
    return scg_of(tmpl) == scg;
}

}  // namespace scgid
