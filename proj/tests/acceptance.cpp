// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brute.hpp"
#include "hypertour/binom.hpp"
#include "hypertour/cli.hpp"
#include "hypertour/errors.hpp"
#include "hypertour/oracle.hpp"
#include "hypertour/realize.hpp"
#include "hypertour/sample.hpp"
#include "hypertour/verify.hpp"

using namespace hypertour;

namespace {

using Clock = std::chrono::steady_clock;

// (n,2) for n <= 6, (n,3) for n <= 5, (n,4) for n <= 6.
std::vector<std::pair<int, int>> desk_range() {
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= 6; ++n) out.emplace_back(n, 2);
  for (int n = 0; n <= 5; ++n) out.emplace_back(n, 3);
  for (int n = 0; n <= 6; ++n) out.emplace_back(n, 4);
  return out;
}

// Largest enumeration in the range is 4^C(6,4) = 4^15.
constexpr std::uint64_t kDeskBudget = 1ull << 30;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Conservation totals, recounted from the arcs.
bool conserved(const Hypertournament& h) {
  const int n = h.n();
  const int k = h.k();
  std::vector<Score> r(static_cast<std::size_t>(n), 0), s(static_cast<std::size_t>(n), 0);
  for (const Arc& arc : h.arcs()) {
    for (std::size_t i = 0; i < arc.size(); ++i) ++(i + 1 == arc.size() ? r : s)[arc.vertices[i]];
  }
  if (std::accumulate(r.begin(), r.end(), Score{0}) != binom(n, k)) return false;
  if (std::accumulate(s.begin(), s.end(), Score{0}) != (k - 1) * binom(n, k)) return false;
  const Score through = n >= 1 ? binom(n - 1, k - 1) : 0;
  for (int v = 0; v < n; ++v) {
    if (r[v] + s[v] != through) return false;
  }
  return true;
}

// Every k-subset carries exactly one arc, checked with bitmasks.
bool covers_once(const Hypertournament& h) {
  std::set<std::uint32_t> masks;
  for (const Arc& arc : h.arcs()) {
    std::uint32_t m = 0;
    for (Vertex v : arc.vertices) m |= 1u << v;
    if (std::popcount(m) != h.k() || !masks.insert(m).second) return false;
  }
  return masks.size() == brute::subset_masks(h.n(), h.k()).size();
}

std::size_t conservation_checks = 0;
std::size_t conservation_failures = 0;

void note_conservation(const Hypertournament& h) {
  ++conservation_checks;
  if (!conserved(h)) ++conservation_failures;
}

Outcome theorem_equivalence() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t sequences = 0;
  for (auto [n, k] : desk_range()) {
    const SequenceSet valid = enumerate_valid(n, k);
    const SequenceSet achievable = achievable_losing_multisets(n, k, kDeskBudget);
    sequences += valid.size();
    if (valid != achievable) {
      o.pass = false;
      o.detail += " mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
  }
  const double t = since(start);
  if (t >= 30.0) o.pass = false;
  o.detail = std::to_string(desk_range().size()) + " (n,k) pairs, " + std::to_string(sequences) +
             " sequences, " + std::to_string(t) + " s (limit 30 s)" + o.detail;
  return o;
}

Outcome realization_soundness() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t realized = 0;
  for (auto [n, k] : desk_range()) {
    for (const auto& r : enumerate_valid(n, k)) {
      const Hypertournament h = realize(r);
      note_conservation(h);
      ++realized;
      if (losing_score_vector(h) != r.values() || !covers_once(h)) {
        o.pass = false;
        o.detail += " bad realization for n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    }
  }
  const double t = since(start);
  if (t >= 60.0) o.pass = false;
  o.detail = std::to_string(realized) + " realizations, " + std::to_string(t) + " s (limit 60 s)" +
             o.detail;
  return o;
}

void candidates(int n, Score max, Score budget, std::vector<Score>& cur,
                std::vector<std::vector<Score>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  const Score used = std::accumulate(cur.begin(), cur.end(), Score{0});
  for (Score v = cur.empty() ? 0 : cur.back(); v <= max && used + v <= budget; ++v) {
    cur.push_back(v);
    candidates(n, max, budget, cur, out);
    cur.pop_back();
  }
}

Outcome landau_reduction() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto tournaments = brute::tournament_scores(n);
    std::vector<std::vector<Score>> all;
    std::vector<Score> cur;
    candidates(n, n - 1, binom(n, 2), cur, all);
    for (const auto& c : all) {
      const ScoreSequence s(2, c);
      const bool by_score = verify_score(s).valid();
      const bool by_landau = verify_landau(s).valid();
      const bool by_brute = tournaments.count(c) > 0;
      ++checked;
      if (by_score != by_landau || by_landau != by_brute) {
        o.pass = false;
        o.detail += " disagreement at n=" + std::to_string(n);
      }
    }
  }
  o.detail = std::to_string(checked) + " candidate sequences, n <= 6" + o.detail;
  return o;
}

Outcome complement_duality() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> pick_n(1, 10), pick_k(2, 4);
  std::size_t valid_cases = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = pick_n(rng);
    const int k = pick_k(rng);
    const auto a = sample_loser_assignment(n, k, rng());
    const LosingScoreSequence r(k, a.losing_score_vector());
    const bool lhs = verify_losing(r).valid();
    const bool rhs = verify_score(complement(r)).valid();
    if (!lhs || lhs != rhs) {
      o.pass = false;
      o.detail += " disagreement on sampled case " + std::to_string(i);
    }
    ++valid_cases;
  }
  // Arbitrary in-range candidates, valid or not.
  std::size_t mixed = 0, mixed_valid = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = pick_n(rng);
    const int k = pick_k(rng);
    const Score cap = n >= k ? binom(n - 1, k - 1) : 0;
    std::uniform_int_distribution<Score> entry(0, cap);
    std::vector<Score> values(static_cast<std::size_t>(n));
    for (Score& v : values) v = entry(rng);
    const LosingScoreSequence r(k, values);
    const bool lhs = verify_losing(r).valid();
    if (lhs != verify_score(complement(r)).valid()) {
      o.pass = false;
      o.detail += " disagreement on candidate " + std::to_string(i);
    }
    ++mixed;
    mixed_valid += lhs;
  }
  o.detail = std::to_string(valid_cases) + " sampled valid sequences, plus " +
             std::to_string(mixed) + " arbitrary candidates (" + std::to_string(mixed_valid) +
             " valid)" + o.detail;
  return o;
}

Outcome exchange_delta() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick_k(2, 4);
  std::size_t plans = 0, doubles = 0, missing = 0;
  for (int i = 0; i < 500; ++i) {
    const int k = pick_k(rng);
    const int n = std::uniform_int_distribution<int>(k, 7)(rng);
    const Hypertournament h = sample_hypertournament(n, k, rng());
    note_conservation(h);
    const auto r = losing_score_vector(h);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (r[x] <= r[y]) continue;
        try {
          const ExchangePlan plan = exchange_repair(h, x, y);
          const Hypertournament after = apply_plan(h, plan);
          note_conservation(after);
          auto expected = r;
          --expected[x];
          ++expected[y];
          ++plans;
          doubles += plan.kind == ExchangeKind::Double;
          if (losing_score_vector(after) != expected || !covers_once(after)) {
            o.pass = false;
            o.detail += " wrong delta";
          }
        } catch (const NoExchangeFound&) {
          ++missing;
          o.pass = false;
        }
      }
    }
  }
  o.detail = std::to_string(plans) + " plans (" + std::to_string(doubles) + " double), " +
             std::to_string(missing) + " without an exchange" + o.detail;
  return o;
}

Outcome conservation() {
  Outcome o;
  o.pass = conservation_failures == 0 && conservation_checks > 0;
  o.detail = std::to_string(conservation_checks) + " hypertournaments, " +
             std::to_string(conservation_failures) + " violations";
  return o;
}

Outcome cli_goldens() {
  struct Golden {
    std::vector<std::string> args;
    int code;
    std::string out;
    std::string err;
  };
  const std::vector<Golden> goldens{
      {{"verify", "--k", "3", "--losing", "1,1,1,1"}, 0, "VALID\n", ""},
      {{"verify", "--k", "3", "--losing", "0,0,0,4"},
       1,
       "INVALID j=3 sum=0 bound=1 (strict-deficit)\n",
       ""},
      {{"verify", "--k", "3", "--losing", "1,0,1"}, 2, "", "error: sequence is not non-decreasing\n"},
      {{"realize", "--k", "3", "--losing", "0,0,1"}, 0, "0 1 2\n", ""},
  };
  Outcome o;
  for (const Golden& g : goldens) {
    std::ostringstream out, err;
    const int code = run_cli(g.args, out, err);
    if (code != g.code || out.str() != g.out || err.str() != g.err) {
      o.pass = false;
      o.detail += " mismatch for `" + g.args[0] + " ... " + g.args.back() + "`";
    }
  }
  o.detail = std::to_string(goldens.size()) + " goldens" + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 theorem equivalence (valid set == achievable set)", theorem_equivalence},
      {"2 realization soundness", realization_soundness},
      {"3 Landau reduction (score, landau, brute force)", landau_reduction},
      {"4 complement duality", complement_duality},
      {"5 exchange delta", exchange_delta},
      {"6 conservation invariants", conservation},
      {"7 CLI goldens", cli_goldens},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
