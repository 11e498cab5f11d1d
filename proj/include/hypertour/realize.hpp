#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypertour/types.hpp"

namespace hypertour {

/// Swaps the positions of `a` and `b` in `e`. Throws VertexNotInArc.
Arc arc_swap(const Arc& e, Vertex a, Vertex b);

/// Builds a hypertournament whose vertex i has losing score r[i].
/// Throws InfeasibleSequence if verify_losing(r) fails.
Hypertournament realize(const LosingScoreSequence& r);

/// Same, for an arbitrary (unsorted) per-vertex target vector. Returns
/// nullopt when the targets are not realizable.
std::optional<Hypertournament> realize_targets(int k, const std::vector<Score>& targets);

/// Reorders the non-losing positions of every arc with a seeded shuffle.
/// Losing scores are unchanged.
Hypertournament shuffle_non_losers(const Hypertournament& h, std::uint64_t seed);

// Splitting at an equality prefix ------------------------------------------

/// A prefix length j < n at which sum_{i<=j} r_i == C(j,k). The cross arcs
/// are those meeting both {0..j-1} and {j..n-1}; alpha is their mean share
/// per vertex of the second part, kept as a reduced fraction.
struct SplitPoint {
  int j = 0;
  int m = 0;
  Score cross_total = 0;
  Score alpha_num = 0;
  Score alpha_den = 1;

  friend bool operator==(const SplitPoint&, const SplitPoint&) = default;
};

/// cross_total = sum_{i=1}^{k-1} C(j,i) C(n-j,k-i), by direct summation.
Score cross_arc_count(int n, int j, int k);

/// Throws PreconditionViolation unless 1 <= j < n and the prefix of length
/// j sums to exactly C(j,k).
SplitPoint make_split_point(const LosingScoreSequence& r, int j);

/// Every j (ascending) admitting a split point.
std::vector<int> equality_prefixes(const LosingScoreSequence& r);

/// How many cross losses each vertex of the second part takes.
struct CrossDistribution {
  /// c[i] for vertex j+i.
  std::vector<Score> losses;
  /// True when every share is floor(alpha) or ceil(alpha).
  bool equal_shares = false;
};

/// Chooses the cross-loss distribution for a split. Equal shares are tried
/// first, with the larger shares placed on the later (larger) entries;
/// a candidate is accepted when the residual r_{j+i} - c_i passes
/// verify_losing and the cross arcs admit that exact loser quota. Failing
/// that, the distribution comes from one exact assignment over all arcs
/// not inside the first part. Throws NoValidDistribution if neither works.
CrossDistribution cross_distribution(const LosingScoreSequence& r, const SplitPoint& sp);

/// Realizes r as the disjoint union of a realization of r_1..r_j on the
/// first j vertices and one of the residual sequence on the rest, plus every
/// cross arc with its loser in the second part. Throws
/// PreconditionViolation for a bad split point and InfeasibleSequence if r
/// is invalid.
Hypertournament split_realize(const LosingScoreSequence& r, const SplitPoint& sp);

// Exchanges ---------------------------------------------------------------

enum class ExchangeKind { Single, Double };

/// Replaces `removed[i]` by `added[i]`; moves one loss from donor to
/// receiver.
struct ExchangePlan {
  ExchangeKind kind = ExchangeKind::Single;
  std::vector<Arc> removed;
  std::vector<Arc> added;
  Vertex donor = 0;
  Vertex receiver = 0;

  friend bool operator==(const ExchangePlan&, const ExchangePlan&) = default;
};

/// Plans a transfer of one loss from x to y, which requires r(x) > r(y).
///
/// Single: an arc holding both with x last gets x and y swapped.
/// Double: otherwise there is a (k-1)-set W avoiding x and y such that the
/// arc on W+{x} ends in x while the arc on W+{y} does not end in y. Let w be
/// the last vertex of the W+{y} arc; swapping y with w there and x with w in
/// the W+{x} arc moves the loss from x to y and leaves w's count alone.
///
/// Throws PreconditionViolation unless r(x) > r(y), NoExchangeFound if no
/// pattern exists.
ExchangePlan exchange_repair(const Hypertournament& h, Vertex x, Vertex y);

/// Throws ArcNotPresent if some removed arc is not in h, and
/// InvariantViolation if an added arc does not cover the same vertex set as
/// the arc it replaces.
Hypertournament apply_plan(const Hypertournament& h, const ExchangePlan& plan);

}  // namespace hypertour
