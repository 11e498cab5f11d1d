#pragma once

#include <cstdint>

#include "hypertour/types.hpp"

namespace hypertour {

/// Independent uniform loser for every k-subset, from a seeded
/// std::mt19937_64. Same seed, same assignment.
LoserAssignment sample_loser_assignment(int n, int k, std::uint64_t seed);

/// Independent uniform ordering of every k-subset (so the non-losing
/// positions are random too). Same seed, same hypertournament.
Hypertournament sample_hypertournament(int n, int k, std::uint64_t seed);

}  // namespace hypertour
