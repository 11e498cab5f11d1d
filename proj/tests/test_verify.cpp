#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "hypertour/binom.hpp"
#include "hypertour/errors.hpp"
#include "hypertour/verify.hpp"

using namespace hypertour;

namespace {

bool realizable(int n, int k, const std::vector<Score>& r) {
  return brute::losing_multisets(n, k).count(r) > 0;
}

// All non-decreasing sequences of length n with entries in [0, max].
void candidates(int n, Score max, std::vector<Score>& cur, std::vector<std::vector<Score>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (Score v = cur.empty() ? 0 : cur.back(); v <= max; ++v) {
    cur.push_back(v);
    candidates(n, max, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Score>> candidates(int n, Score max) {
  std::vector<std::vector<Score>> out;
  std::vector<Score> cur;
  candidates(n, max, cur, out);
  return out;
}

}  // namespace

TEST_CASE("verify_losing examples") {
  CHECK(verify_losing(LosingScoreSequence(3, {1, 1, 1, 1})).valid());
  CHECK(realizable(4, 3, {1, 1, 1, 1}));

  const Verdict bad = verify_losing(LosingScoreSequence(3, {0, 0, 0, 4}));
  REQUIRE_FALSE(bad.valid());
  CHECK(*bad.violation == Violation{3, 0, 1, ViolationKind::StrictDeficit});
  CHECK_FALSE(realizable(4, 3, {0, 0, 0, 4}));

  for (int k = 2; k <= 6; ++k) {
    std::vector<Score> single(static_cast<std::size_t>(k), 0);
    single.back() = 1;
    CHECK(verify_losing(LosingScoreSequence(k, single)).valid());
  }

  CHECK(verify_losing(LosingScoreSequence(2, {1, 1, 1})).valid());
  CHECK(realizable(3, 2, {1, 1, 1}));
}

TEST_CASE("verify_losing edge cases") {
  CHECK(verify_losing(LosingScoreSequence(3, {})).valid());
  CHECK(verify_losing(LosingScoreSequence(4, {0, 0, 0})).valid());
  const Verdict null_bad = verify_losing(LosingScoreSequence(4, {0, 0, 1}));
  REQUIRE_FALSE(null_bad.valid());
  CHECK(null_bad.violation->kind == ViolationKind::TotalMismatch);
  CHECK(null_bad.violation->j == 3);
  const Verdict over = verify_losing(LosingScoreSequence(2, {1, 1, 2}));
  REQUIRE_FALSE(over.valid());
  CHECK(*over.violation == Violation{3, 4, 3, ViolationKind::TotalMismatch});
}

TEST_CASE("verify_score examples") {
  CHECK(verify_score(ScoreSequence(3, {2, 2, 2, 2})).valid());
  CHECK(verify_score(ScoreSequence(2, {0, 1, 2})).valid());
  CHECK_THROWS_AS(verify_score(ScoreSequence(2, {0, 0, 3})), EntryOutOfRange);
}

TEST_CASE("verify_landau examples") {
  CHECK(verify_landau(ScoreSequence(2, {1, 1, 1})).valid());
  const Verdict bad = verify_landau(ScoreSequence(2, {0, 0, 3}));
  REQUIRE_FALSE(bad.valid());
  CHECK(*bad.violation == Violation{2, 0, 1, ViolationKind::StrictDeficit});
  CHECK(brute::tournament_scores(3).count({0, 0, 3}) == 0);
  CHECK(verify_landau(ScoreSequence(2, {0})).valid());
  CHECK_THROWS_AS(verify_landau(ScoreSequence(3, {0, 0, 1})), WrongK);
}

TEST_CASE("verify_losing matches brute force on every small candidate") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= (k == 2 ? 6 : 5); ++n) {
      const auto achievable = brute::losing_multisets(n, k);
      const Score max = n >= k ? binom(n, k) : 1;
      for (const auto& cand : candidates(n, max)) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(verify_losing(LosingScoreSequence(k, cand)).valid() == (achievable.count(cand) > 0));
      }
    }
  }
}

TEST_CASE("reported violation index is minimal") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& cand : candidates(n, 6)) {
        const Verdict v = verify_losing(LosingScoreSequence(k, cand));
        if (v.valid()) continue;
        Score prefix = 0;
        for (int j = 1; j < v.violation->j; ++j) {
          prefix += cand[j - 1];
          CHECK(prefix >= binom(j, k));
        }
        prefix += cand[v.violation->j - 1];
        CHECK(prefix == v.violation->prefix_sum);
        if (v.violation->kind == ViolationKind::StrictDeficit) {
          CHECK(v.violation->j < n);
          CHECK(prefix < v.violation->bound);
        } else {
          CHECK(v.violation->j == n);
          CHECK(prefix != binom(n, k));
        }
      }
    }
  }
}

TEST_CASE("duality between verify_losing and verify_score") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 6; ++n) {
      const Score cap = n >= k ? binom(n - 1, k - 1) : 0;
      for (const auto& cand : candidates(n, cap)) {
        const LosingScoreSequence r(k, cand);
        CHECK(verify_losing(r).valid() == verify_score(complement(r)).valid());
      }
    }
  }
}

TEST_CASE("verify_score and verify_landau agree for k = 2") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& cand : candidates(n, n > 0 ? n - 1 : 0)) {
      const ScoreSequence s(2, cand);
      CHECK(verify_score(s).valid() == verify_landau(s).valid());
    }
  }
}
