#include "hypertour/assignment.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hypertour {

std::optional<std::vector<Vertex>> assign_losers(int n, std::span<const Subset> subsets,
                                                 std::span<const Score> quota) {
  const auto vertex_count = static_cast<std::size_t>(n);
  if (quota.size() != vertex_count) return std::nullopt;
  if (std::any_of(quota.begin(), quota.end(), [](Score q) { return q < 0; })) return std::nullopt;
  if (std::accumulate(quota.begin(), quota.end(), Score{0}) !=
      static_cast<Score>(subsets.size())) {
    return std::nullopt;
  }

  constexpr int kUnseen = -2;
  constexpr int kRoot = -1;

  std::vector<Vertex> loser(subsets.size(), -1);
  std::vector<Score> load(vertex_count, 0);
  std::vector<std::vector<std::size_t>> held(vertex_count);
  std::vector<int> parent(vertex_count);
  std::vector<std::size_t> via(vertex_count);
  std::deque<Vertex> queue;

  auto take = [&](std::size_t subset, Vertex v) {
    loser[subset] = v;
    held[v].push_back(subset);
    ++load[v];
  };
  auto release = [&](std::size_t subset, Vertex v) {
    auto& list = held[v];
    list.erase(std::find(list.begin(), list.end(), subset));
    --load[v];
  };

  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::fill(parent.begin(), parent.end(), kUnseen);
    queue.clear();
    Vertex target = -1;

    auto discover = [&](Vertex w, int from, std::size_t through) {
      if (w < 0 || w >= n || parent[w] != kUnseen || quota[w] == 0) return false;
      parent[w] = from;
      via[w] = through;
      if (load[w] < quota[w]) {
        target = w;
        return true;
      }
      queue.push_back(w);
      return false;
    };

    for (Vertex w : subsets[s]) {
      if (discover(w, kRoot, s)) break;
    }
    while (target < 0 && !queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (std::size_t t : held[v]) {
        for (Vertex w : subsets[t]) {
          if (discover(w, v, t)) break;
        }
        if (target >= 0) break;
      }
    }
    if (target < 0) return std::nullopt;

    for (Vertex w = target; parent[w] != kRoot;) {
      const auto from = static_cast<Vertex>(parent[w]);
      release(via[w], from);
      take(via[w], w);
      w = from;
    }
    Vertex root = target;
    while (parent[root] != kRoot) root = static_cast<Vertex>(parent[root]);
    take(s, root);
  }
  return loser;
}

}  // namespace hypertour
