#pragma once

#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

/// Canonical relabeling of g: isomorphism-invariant, and always a relabeling
/// of g itself. Degree partition refinement plus backtracking over
/// partition-respecting permutations, taking the lexicographically smallest
/// adjacency encoding. Intended for small graphs (n <= ~10).
Graph canonical_form(const Graph& g);

/// perm with perm[old] = new such that relabel(g, perm) == canonical_form(g).
std::vector<int> canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// Compact order-independent key of the canonical form (upper-triangle bits);
/// equal keys for graphs of equal order iff isomorphic. Used for dedup maps.
std::uint64_t canonical_key(const Graph& g);

}  // namespace mbd
