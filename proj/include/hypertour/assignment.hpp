#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypertour/types.hpp"

namespace hypertour {

/// Picks one loser per subset so that vertex v is picked exactly quota[v]
/// times, or returns nullopt if no such choice exists.
///
/// Bipartite b-matching by augmenting paths. Subsets are matched in the
/// given order; each search is breadth-first over vertices, visiting a
/// subset's members in ascending order, so the result is deterministic.
/// A vertex with quota 0 never loses, which is how callers restrict the
/// eligible losers.
std::optional<std::vector<Vertex>> assign_losers(int n, std::span<const Subset> subsets,
                                                 std::span<const Score> quota);

}  // namespace hypertour
