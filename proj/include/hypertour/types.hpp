#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace hypertour {

/// Vertices are 0-based; v_1..v_n of the usual notation are 0..n-1.
using Vertex = std::int32_t;
using Score = std::int64_t;

/// Sorted vertex set of size k.
using Subset = std::vector<Vertex>;

// Sequences -----------------------------------------------------------------

/// Non-decreasing sequence of losing scores r_1 <= ... <= r_n for arc size k.
/// The constructor sorts its input and rejects negative entries and k < 2.
class LosingScoreSequence {
 public:
  LosingScoreSequence(int k, std::vector<Score> values);

  [[nodiscard]] int n() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const std::vector<Score>& values() const { return values_; }
  [[nodiscard]] Score operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] Score sum() const;

  friend auto operator<=>(const LosingScoreSequence&, const LosingScoreSequence&) = default;
  friend bool operator==(const LosingScoreSequence&, const LosingScoreSequence&) = default;

 private:
  int k_;
  std::vector<Score> values_;
};

/// Non-decreasing sequence of scores s_1 <= ... <= s_n for arc size k.
/// Sorting and non-negativity are enforced here; the upper bound
/// s_i <= C(n-1, k-1) is reported by verify_score (EntryOutOfRange) so that
/// the Landau check can still judge out-of-range tournament sequences.
class ScoreSequence {
 public:
  ScoreSequence(int k, std::vector<Score> values);

  [[nodiscard]] int n() const { return static_cast<int>(values_.size()); }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const std::vector<Score>& values() const { return values_; }
  [[nodiscard]] Score operator[](std::size_t i) const { return values_[i]; }

  /// Number of arcs through any one vertex, C(n-1, k-1) (0 when n == 0).
  [[nodiscard]] Score per_vertex_arcs() const;
  [[nodiscard]] bool within_range() const;

  friend auto operator<=>(const ScoreSequence&, const ScoreSequence&) = default;
  friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;

 private:
  int k_;
  std::vector<Score> values_;
};

/// r_i = C(n-1,k-1) - s_{n+1-i}. Throws EntryOutOfRange if some s_i exceeds
/// C(n-1,k-1).
LosingScoreSequence complement(const ScoreSequence& s);
/// s_i = C(n-1,k-1) - r_{n+1-i}. Throws EntryOutOfRange as above.
ScoreSequence complement(const LosingScoreSequence& r);

// Subsets -------------------------------------------------------------------

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

/// Position of a sorted k-subset of {0..n-1} in lexicographic order.
std::size_t subset_rank(int n, std::span<const Vertex> subset);

// Arcs and hypertournaments -------------------------------------------------

/// Ordered k-tuple of distinct vertices; the last entry loses.
struct Arc {
  std::vector<Vertex> vertices;

  [[nodiscard]] std::size_t size() const { return vertices.size(); }
  [[nodiscard]] Vertex loser() const { return vertices.back(); }
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] Subset subset() const;

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Exactly one arc per k-subset of the n vertices, or no arcs when n < k.
/// Construction validates; a Hypertournament object is always well formed.
class Hypertournament {
 public:
  /// Throws MalformedHypertournament when the arcs do not cover every
  /// k-subset exactly once.
  Hypertournament(int n, int k, std::vector<Arc> arcs);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }

  friend bool operator==(const Hypertournament&, const Hypertournament&) = default;

 private:
  int n_;
  int k_;
  std::vector<Arc> arcs_;
};

/// Losing score of every vertex, indexed by vertex (not sorted).
std::vector<Score> losing_score_vector(const Hypertournament& h);
/// Score of every vertex, indexed by vertex (not sorted).
std::vector<Score> score_vector(const Hypertournament& h);

LosingScoreSequence losing_scores(const Hypertournament& h);
ScoreSequence scores(const Hypertournament& h);

// Loser assignments ---------------------------------------------------------

/// The loser chosen for each k-subset, stored in lexicographic subset order.
/// Retains exactly what losing scores depend on.
class LoserAssignment {
 public:
  /// `losers[i]` belongs to the i-th k-subset in lexicographic order.
  /// Throws InvariantViolation on a size mismatch or a non-member loser.
  LoserAssignment(int n, int k, std::vector<Vertex> losers);

  /// Throws InvariantViolation unless the map's domain is exactly the set
  /// of k-subsets and every loser is a member of its subset.
  static LoserAssignment from_map(int n, int k, const std::map<Subset, Vertex>& losers);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const std::vector<Vertex>& losers() const { return losers_; }
  [[nodiscard]] Vertex loser_of(std::span<const Vertex> subset) const;
  [[nodiscard]] std::map<Subset, Vertex> to_map() const;
  [[nodiscard]] std::vector<Score> losing_score_vector() const;

  friend bool operator==(const LoserAssignment&, const LoserAssignment&) = default;

 private:
  int n_;
  int k_;
  std::vector<Vertex> losers_;
};

LoserAssignment to_loser_assignment(const Hypertournament& h);
/// One arc per subset: the non-losers in ascending order, then the loser.
Hypertournament from_loser_assignment(const LoserAssignment& a);

}  // namespace hypertour
