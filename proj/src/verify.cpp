#include "hypertour/verify.hpp"

#include <string>

#include "hypertour/binom.hpp"
#include "hypertour/errors.hpp"

namespace hypertour {

Verdict verify_losing(const LosingScoreSequence& r) {
  const int n = r.n();
  Score prefix = 0;
  for (int j = 1; j < n; ++j) {
    prefix += r[j - 1];
    const Score bound = binom(j, r.k());
    if (prefix < bound) return {Violation{j, prefix, bound, ViolationKind::StrictDeficit}};
  }
  if (n == 0) return {};
  prefix += r[n - 1];
  const Score total = binom(n, r.k());
  if (prefix != total) return {Violation{n, prefix, total, ViolationKind::TotalMismatch}};
  return {};
}

Verdict verify_score(const ScoreSequence& s) { return verify_losing(complement(s)); }

Verdict verify_landau(const ScoreSequence& s) {
  if (s.k() != 2) {
    throw WrongK("Landau's condition applies to tournaments (k = 2), got k = " +
                 std::to_string(s.k()));
  }
  const auto& values = s.values();
  const auto n = static_cast<Score>(values.size());
  Score prefix = 0;
  for (Score j = 1; j <= n; ++j) {
    prefix += values[j - 1];
    const Score bound = j * (j - 1) / 2;
    if (j < n && prefix < bound) {
      return {Violation{static_cast<int>(j), prefix, bound, ViolationKind::StrictDeficit}};
    }
    if (j == n && prefix != bound) {
      return {Violation{static_cast<int>(j), prefix, bound, ViolationKind::TotalMismatch}};
    }
  }
  return {};
}

}  // namespace hypertour
