#pragma once

#include <cstdint>
#include <vector>

#include "strongedge/graph.hpp"

namespace strongedge {

inline constexpr int max_enumeration_order = 9;

/// Canonical form of a graph with at most 11 vertices: the relabelled upper-triangle adjacency
/// bits, minimised over an individualisation-refinement search tree. Isomorphic graphs, and only
/// those, share a key.
std::uint64_t canonical_key(const Graph& g);

/// The graph realising canonical_key(g).
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class of connected graphs on n vertices (1 <= n <= 9),
/// each in canonical form, ordered by canonical key. Throws std::out_of_range otherwise.
std::vector<Graph> enumerate_connected(int n);

} // namespace strongedge
