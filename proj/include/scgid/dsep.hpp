#pragma once

#include <span>

#include "scgid/unrolled_graph.hpp"

namespace scgid {

/// d-separation of x and y given z, by reachability over (vertex, direction) states.
/// Throws std::invalid_argument if x == y or either endpoint is in z.
bool d_separated(const UnrolledGraph& g, VertexId x, VertexId y, std::span<const VertexId> z);

bool d_separated(const UnrolledGraph& g, Vertex x, Vertex y, std::span<const Vertex> z);

}  // namespace scgid
