#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "hypertour/types.hpp"

namespace hypertour {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

using SequenceSet = std::set<LosingScoreSequence>;

/// k^C(n,k), or nullopt if it overflows 64 bits.
std::optional<std::uint64_t> assignment_count(int n, int k);

/// Throws BudgetExceeded when k^C(n,k) is above `budget` (or overflows).
void check_budget(int n, int k, std::uint64_t budget);

/// Streams every loser assignment on (n, k) exactly once. A mixed-radix
/// counter over the lexicographically ordered subsets; digit i selects the
/// loser among the members of subset i. Only O(C(n,k)) state is kept.
class AssignmentEnumerator {
 public:
  /// Throws BudgetExceeded if k^C(n,k) > budget.
  AssignmentEnumerator(int n, int k, std::uint64_t budget = kDefaultBudget);

  [[nodiscard]] LoserAssignment current() const;
  /// Advances to the next assignment; false once all have been produced.
  bool next();

 private:
  int n_;
  int k_;
  std::vector<Subset> subsets_;
  std::vector<int> digits_;
};

/// Calls fn for every assignment; returns how many were visited.
std::uint64_t for_each_assignment(int n, int k,
                                  const std::function<void(const LoserAssignment&)>& fn,
                                  std::uint64_t budget = kDefaultBudget);

/// Distinct sorted losing-score vectors over all k^C(n,k) assignments.
/// The enumeration is split into independent blocks of the counter and run
/// with OpenMP when available.
SequenceSet achievable_losing_multisets(int n, int k, std::uint64_t budget = kDefaultBudget);

/// Single-threaded reference for achievable_losing_multisets: walks the
/// AssignmentEnumerator and counts losers of each assignment from scratch.
SequenceSet achievable_losing_multisets_serial(int n, int k,
                                               std::uint64_t budget = kDefaultBudget);

/// Exhaustive sweep over the same choice tree that merges branches reaching
/// the same per-vertex losing-score vector, so its cost is bounded by the
/// number of distinct partial vectors rather than k^C(n,k). Used where the
/// plain enumeration is over budget.
SequenceSet reachable_losing_multisets(int n, int k);

/// All non-decreasing non-negative sequences of length n whose prefix sums
/// dominate C(j,k) with equality at j = n, by backtracking with prefix-sum
/// pruning.
SequenceSet enumerate_valid(int n, int k);

}  // namespace hypertour
