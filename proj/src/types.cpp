#include "hypertour/types.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypertour/binom.hpp"
#include "hypertour/errors.hpp"

namespace hypertour {

namespace {

void check_k(int k) {
  if (k < 2) throw InvariantViolation("arc size k must be at least 2, got " + std::to_string(k));
}

std::vector<Score> sorted_non_negative(std::vector<Score> values) {
  for (Score v : values) {
    if (v < 0) throw InvariantViolation("negative entry " + std::to_string(v) + " in sequence");
  }
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<Score> reversed_complement(int n, int k, const std::vector<Score>& values) {
  const Score total = n == 0 ? 0 : binom(n - 1, k - 1);
  std::vector<Score> out;
  out.reserve(values.size());
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    if (*it > total) {
      throw EntryOutOfRange("entry " + std::to_string(*it) + " exceeds C(" + std::to_string(n - 1) +
                            "," + std::to_string(k - 1) + ") = " + std::to_string(total));
    }
    out.push_back(total - *it);
  }
  return out;
}

std::string describe(std::span<const Vertex> vs) {
  std::string s = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + ")";
}

}  // namespace

LosingScoreSequence::LosingScoreSequence(int k, std::vector<Score> values)
    : k_(k), values_(sorted_non_negative(std::move(values))) {
  check_k(k);
}

Score LosingScoreSequence::sum() const {
  return std::accumulate(values_.begin(), values_.end(), Score{0});
}

ScoreSequence::ScoreSequence(int k, std::vector<Score> values)
    : k_(k), values_(sorted_non_negative(std::move(values))) {
  check_k(k);
}

Score ScoreSequence::per_vertex_arcs() const { return n() == 0 ? 0 : binom(n() - 1, k_ - 1); }

bool ScoreSequence::within_range() const {
  return values_.empty() || values_.back() <= per_vertex_arcs();
}

LosingScoreSequence complement(const ScoreSequence& s) {
  return LosingScoreSequence(s.k(), reversed_complement(s.n(), s.k(), s.values()));
}

ScoreSequence complement(const LosingScoreSequence& r) {
  return ScoreSequence(r.k(), reversed_complement(r.n(), r.k(), r.values()));
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || n < k) return out;
  out.reserve(static_cast<std::size_t>(binom(n, k)));
  Subset current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 0);
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(int n, std::span<const Vertex> subset) {
  // rank = C(n,k) - 1 - sum_i C(n-1-c_i, k-i) for c_0 < ... < c_{k-1}.
  const auto k = static_cast<std::int64_t>(subset.size());
  std::int64_t tail = 0;
  for (std::int64_t i = 0; i < k; ++i) tail += binom(n - 1 - subset[i], k - i);
  return static_cast<std::size_t>(binom(n, k) - 1 - tail);
}

bool Arc::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Subset Arc::subset() const {
  Subset s = vertices;
  std::sort(s.begin(), s.end());
  return s;
}

Hypertournament::Hypertournament(int n, int k, std::vector<Arc> arcs)
    : n_(n), k_(k), arcs_(std::move(arcs)) {
  if (n < 0) throw MalformedHypertournament("negative vertex count");
  if (k < 2) throw MalformedHypertournament("arc size k must be at least 2");
  if (n < k) {
    if (!arcs_.empty()) {
      throw MalformedHypertournament("a hypertournament with n < k has no arcs");
    }
    return;
  }
  const auto expected = static_cast<std::size_t>(binom(n, k));
  if (arcs_.size() != expected) {
    throw MalformedHypertournament("expected " + std::to_string(expected) + " arcs, got " +
                                   std::to_string(arcs_.size()));
  }
  std::vector<char> seen(expected, 0);
  for (const Arc& arc : arcs_) {
    if (arc.size() != static_cast<std::size_t>(k)) {
      throw MalformedHypertournament("arc " + describe(arc.vertices) + " does not have " +
                                     std::to_string(k) + " vertices");
    }
    Subset s = arc.subset();
    if (s.front() < 0 || s.back() >= n) {
      throw MalformedHypertournament("arc " + describe(arc.vertices) + " has a vertex out of range");
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw MalformedHypertournament("arc " + describe(arc.vertices) + " repeats a vertex");
    }
    auto& slot = seen[subset_rank(n, s)];
    if (slot) {
      throw MalformedHypertournament("subset " + describe(s) + " carries more than one arc");
    }
    slot = 1;
  }
}

std::vector<Score> losing_score_vector(const Hypertournament& h) {
  std::vector<Score> r(static_cast<std::size_t>(h.n()), 0);
  for (const Arc& arc : h.arcs()) ++r[arc.loser()];
  return r;
}

std::vector<Score> score_vector(const Hypertournament& h) {
  std::vector<Score> s(static_cast<std::size_t>(h.n()), 0);
  for (const Arc& arc : h.arcs()) {
    for (std::size_t i = 0; i + 1 < arc.size(); ++i) ++s[arc.vertices[i]];
  }
  return s;
}

LosingScoreSequence losing_scores(const Hypertournament& h) {
  return LosingScoreSequence(h.k(), losing_score_vector(h));
}

ScoreSequence scores(const Hypertournament& h) { return ScoreSequence(h.k(), score_vector(h)); }

LoserAssignment::LoserAssignment(int n, int k, std::vector<Vertex> losers)
    : n_(n), k_(k), losers_(std::move(losers)) {
  check_k(k);
  if (n < 0) throw InvariantViolation("negative vertex count");
  const auto subsets = k_subsets(n, k);
  if (losers_.size() != subsets.size()) {
    throw InvariantViolation("loser assignment has " + std::to_string(losers_.size()) +
                             " entries for " + std::to_string(subsets.size()) + " subsets");
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (!std::binary_search(subsets[i].begin(), subsets[i].end(), losers_[i])) {
      throw InvariantViolation("loser " + std::to_string(losers_[i]) + " is not a member of " +
                               describe(subsets[i]));
    }
  }
}

LoserAssignment LoserAssignment::from_map(int n, int k, const std::map<Subset, Vertex>& losers) {
  check_k(k);
  const auto subsets = k_subsets(n, k);
  std::vector<Vertex> ordered;
  ordered.reserve(subsets.size());
  for (const Subset& s : subsets) {
    auto it = losers.find(s);
    if (it == losers.end()) {
      throw InvariantViolation("loser assignment is missing subset " + describe(s));
    }
    ordered.push_back(it->second);
  }
  if (losers.size() != subsets.size()) {
    throw InvariantViolation("loser assignment has entries that are not k-subsets of the vertices");
  }
  return LoserAssignment(n, k, std::move(ordered));
}

Vertex LoserAssignment::loser_of(std::span<const Vertex> subset) const {
  return losers_[subset_rank(n_, subset)];
}

std::map<Subset, Vertex> LoserAssignment::to_map() const {
  std::map<Subset, Vertex> out;
  const auto subsets = k_subsets(n_, k_);
  for (std::size_t i = 0; i < subsets.size(); ++i) out.emplace(subsets[i], losers_[i]);
  return out;
}

std::vector<Score> LoserAssignment::losing_score_vector() const {
  std::vector<Score> r(static_cast<std::size_t>(n_), 0);
  for (Vertex v : losers_) ++r[v];
  return r;
}

LoserAssignment to_loser_assignment(const Hypertournament& h) {
  std::vector<Vertex> losers(h.arcs().size());
  for (const Arc& arc : h.arcs()) losers[subset_rank(h.n(), arc.subset())] = arc.loser();
  return LoserAssignment(h.n(), h.k(), std::move(losers));
}

Hypertournament from_loser_assignment(const LoserAssignment& a) {
  const auto subsets = k_subsets(a.n(), a.k());
  std::vector<Arc> arcs;
  arcs.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    Arc arc;
    arc.vertices.reserve(subsets[i].size());
    for (Vertex v : subsets[i]) {
      if (v != a.losers()[i]) arc.vertices.push_back(v);
    }
    arc.vertices.push_back(a.losers()[i]);
    arcs.push_back(std::move(arc));
  }
  return Hypertournament(a.n(), a.k(), std::move(arcs));
}

}  // namespace hypertour
