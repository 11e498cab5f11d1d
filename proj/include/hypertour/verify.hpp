#pragma once

#include <optional>

#include "hypertour/types.hpp"

namespace hypertour {

enum class ViolationKind { StrictDeficit, TotalMismatch };

/// Witness for a failed prefix condition: the prefix of length j sums to
/// prefix_sum, which is below `bound` (j < n) or differs from the total
/// (j == n).
struct Violation {
  int j = 0;
  Score prefix_sum = 0;
  Score bound = 0;
  ViolationKind kind = ViolationKind::StrictDeficit;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  std::optional<Violation> violation;

  [[nodiscard]] bool valid() const { return !violation.has_value(); }
  explicit operator bool() const { return valid(); }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Checks sum_{i<=j} r_i >= C(j,k) for every j, with equality at j = n.
/// Reports the smallest failing j. Valid for n = 0, and for n < k exactly
/// when every entry is zero.
Verdict verify_losing(const LosingScoreSequence& r);

/// Complements s into losing scores and runs verify_losing; the witness, if
/// any, refers to the complemented sequence. Throws EntryOutOfRange when an
/// entry exceeds C(n-1,k-1).
Verdict verify_score(const ScoreSequence& s);

/// Landau's tournament condition, sum_{i<=j} s_i >= j(j-1)/2 with equality
/// at j = n. Standalone implementation for cross-checking verify_score.
/// Throws WrongK unless k == 2.
Verdict verify_landau(const ScoreSequence& s);

}  // namespace hypertour
