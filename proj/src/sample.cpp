#include "hypertour/sample.hpp"

#include <algorithm>
#include <random>

namespace hypertour {

LoserAssignment sample_loser_assignment(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::vector<Vertex> losers;
  for (const Subset& s : k_subsets(n, k)) losers.push_back(s[pick(rng)]);
  return LoserAssignment(n, k, std::move(losers));
}

Hypertournament sample_hypertournament(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (Subset& s : k_subsets(n, k)) {
    std::shuffle(s.begin(), s.end(), rng);
    arcs.push_back(Arc{std::move(s)});
  }
  return Hypertournament(n, k, std::move(arcs));
}

}  // namespace hypertour
