#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "scgid/template_graph.hpp"
#include "scgid/types.hpp"

namespace scgid {

/// Summary causal graph: one vertex per series, adj(u, v) iff some micro edge
/// from series u to series v exists at any lag. The diagonal holds self-loops.
class Scg {
public:
    Scg() = default;
    explicit Scg(std::size_t n_series) : n_(n_series), adj_(n_series * n_series, 0) {}

    /// Row-major bit packing: bit u*n+v set iff u -> v. Requires n <= 8.
    static Scg from_mask(std::size_t n_series, std::uint64_t mask);
    std::uint64_t mask() const;

    std::size_t n_series() const { return n_; }
    bool edge(SeriesId from, SeriesId to) const { return adj_[index(from, to)] != 0; }
    bool edge(std::size_t from, std::size_t to) const { return edge(sid(from), sid(to)); }
    void set_edge(SeriesId from, SeriesId to, bool present = true) { adj_[index(from, to)] = present ? 1 : 0; }
    void set_edge(std::size_t from, std::size_t to, bool present = true) { set_edge(sid(from), sid(to), present); }
    std::size_t edge_count() const;

    bool operator==(const Scg&) const = default;

private:
    static SeriesId sid(std::size_t i) { return SeriesId{static_cast<std::uint32_t>(i)}; }
    std::size_t index(SeriesId from, SeriesId to) const;

    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Unordered pair of distinct series, normalized so that x < y.
struct MacroPair {
    SeriesId x;
    SeriesId y;

    static MacroPair normalized(SeriesId a, SeriesId b);
    bool operator==(const MacroPair&) const = default;
};

Scg scg_of(const TemplateGraph& tmpl);

bool is_bidirected(const Scg& scg, SeriesId x, SeriesId y);
bool has_self_loop(const Scg& scg, SeriesId x);
bool adjacent(const Scg& scg, SeriesId x, SeriesId y);
std::vector<SeriesId> neighbors(const Scg& scg, SeriesId x);

/// Whether some third series z forms, together with x and y, an unshielded
/// collider at x or at y: z has an arrowhead into one of them and is not
/// adjacent to the other. Symmetric in (x, y).
bool unshielded_collider_exists(const Scg& scg, SeriesId x, SeriesId y);

/// scg_of(tmpl) == scg. Throws std::invalid_argument on a dimension mismatch.
bool compatible(const Scg& scg, const TemplateGraph& tmpl);

}  // namespace scgid
