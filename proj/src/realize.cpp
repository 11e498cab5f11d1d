#include "hypertour/realize.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "hypertour/assignment.hpp"
#include "hypertour/binom.hpp"
#include "hypertour/errors.hpp"
#include "hypertour/verify.hpp"

namespace hypertour {

namespace {

// Candidate equal-share placements examined before falling back to the
// joint assignment.
constexpr std::size_t kMaxEqualShareCandidates = 4096;

std::string witness_text(const Violation& v) {
  return "prefix j=" + std::to_string(v.j) + " sums to " + std::to_string(v.prefix_sum) +
         (v.kind == ViolationKind::StrictDeficit ? ", below C(j,k)=" : ", total should be ") +
         std::to_string(v.bound);
}

void require_valid(const LosingScoreSequence& r) {
  const Verdict verdict = verify_losing(r);
  if (!verdict) {
    throw InfeasibleSequence("not a losing score sequence: " + witness_text(*verdict.violation));
  }
}

Hypertournament from_losers(int n, int k, std::span<const Subset> subsets,
                            std::span<const Vertex> losers) {
  std::vector<Arc> arcs;
  arcs.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    Arc arc;
    for (Vertex v : subsets[i]) {
      if (v != losers[i]) arc.vertices.push_back(v);
    }
    arc.vertices.push_back(losers[i]);
    arcs.push_back(std::move(arc));
  }
  return Hypertournament(n, k, std::move(arcs));
}

void post_check(const Hypertournament& h, const std::vector<Score>& targets) {
  if (losing_score_vector(h) != targets) {
    throw std::logic_error("realization does not reproduce the requested losing scores");
  }
}

// Where a k-subset sits relative to the split {0..j-1} | {j..n-1}.
enum class Side { First, Second, Cross };

Side side_of(const Subset& s, int j) {
  if (s.back() < j) return Side::First;
  if (s.front() >= j) return Side::Second;
  return Side::Cross;
}

std::vector<Subset> cross_subsets(int n, int k, int j) {
  std::vector<Subset> out;
  for (Subset& s : k_subsets(n, k)) {
    if (side_of(s, j) == Side::Cross) out.push_back(std::move(s));
  }
  return out;
}

// Quota vector over all n vertices: zero on the first part, c on the second.
std::vector<Score> second_part_quota(int n, int j, const std::vector<Score>& c) {
  std::vector<Score> quota(static_cast<std::size_t>(n), 0);
  std::copy(c.begin(), c.end(), quota.begin() + j);
  return quota;
}

std::vector<Score> residual(const LosingScoreSequence& r, int j, const std::vector<Score>& c) {
  std::vector<Score> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = r[j + i] - c[i];
  return out;
}

bool residual_valid(int k, const std::vector<Score>& res) {
  if (std::any_of(res.begin(), res.end(), [](Score v) { return v < 0; })) return false;
  return verify_losing(LosingScoreSequence(k, res)).valid();
}

// Calls visit(positions) for q-subsets of {0..m-1}, starting from the last q
// positions and moving the larger shares towards the front. Stops when
// visit returns true or after `limit` candidates.
template <typename Visit>
bool for_each_ceil_placement(int m, int q, std::size_t limit, Visit&& visit) {
  // Combinations of the reversed index list m-1, m-2, ..., 0 in lex order.
  std::vector<int> pick(static_cast<std::size_t>(q));
  std::iota(pick.begin(), pick.end(), 0);
  for (std::size_t seen = 0; seen < limit; ++seen) {
    std::vector<int> positions(pick.size());
    std::transform(pick.begin(), pick.end(), positions.begin(), [m](int p) { return m - 1 - p; });
    if (visit(positions)) return true;
    int i = q - 1;
    while (i >= 0 && pick[i] == m - q + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int t = i + 1; t < q; ++t) pick[t] = pick[t - 1] + 1;
  }
  return false;
}

}  // namespace

Arc arc_swap(const Arc& e, Vertex a, Vertex b) {
  auto pa = std::find(e.vertices.begin(), e.vertices.end(), a);
  auto pb = std::find(e.vertices.begin(), e.vertices.end(), b);
  if (pa == e.vertices.end() || pb == e.vertices.end()) {
    throw VertexNotInArc("vertex " + std::to_string(pa == e.vertices.end() ? a : b) +
                         " does not occur in the arc");
  }
  Arc out = e;
  std::iter_swap(out.vertices.begin() + (pa - e.vertices.begin()),
                 out.vertices.begin() + (pb - e.vertices.begin()));
  return out;
}

std::optional<Hypertournament> realize_targets(int k, const std::vector<Score>& targets) {
  const int n = static_cast<int>(targets.size());
  if (n < k) {
    if (std::any_of(targets.begin(), targets.end(), [](Score v) { return v != 0; })) {
      return std::nullopt;
    }
    return Hypertournament(n, k, {});
  }
  const auto subsets = k_subsets(n, k);
  auto losers = assign_losers(n, subsets, targets);
  if (!losers) return std::nullopt;
  return from_losers(n, k, subsets, *losers);
}

Hypertournament realize(const LosingScoreSequence& r) {
  require_valid(r);
  auto h = realize_targets(r.k(), r.values());
  if (!h) throw std::logic_error("no realization found for a sequence that passes verification");
  post_check(*h, r.values());
  return std::move(*h);
}

Hypertournament shuffle_non_losers(const Hypertournament& h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs = h.arcs();
  for (Arc& arc : arcs) std::shuffle(arc.vertices.begin(), arc.vertices.end() - 1, rng);
  return Hypertournament(h.n(), h.k(), std::move(arcs));
}

Score cross_arc_count(int n, int j, int k) {
  Score total = 0;
  for (int i = 1; i <= k - 1; ++i) total += binom(j, i) * binom(n - j, k - i);
  return total;
}

SplitPoint make_split_point(const LosingScoreSequence& r, int j) {
  const int n = r.n();
  if (j < 1 || j >= n) {
    throw PreconditionViolation("split index j=" + std::to_string(j) + " must satisfy 1 <= j < n=" +
                                std::to_string(n));
  }
  const Score prefix = std::accumulate(r.values().begin(), r.values().begin() + j, Score{0});
  const Score bound = binom(j, r.k());
  if (prefix != bound) {
    throw PreconditionViolation("prefix of length " + std::to_string(j) + " sums to " +
                                std::to_string(prefix) + ", not C(j,k)=" + std::to_string(bound));
  }
  SplitPoint sp;
  sp.j = j;
  sp.m = n - j;
  sp.cross_total = cross_arc_count(n, j, r.k());
  const Score g = std::gcd(sp.cross_total, static_cast<Score>(sp.m));
  sp.alpha_num = sp.cross_total / g;
  sp.alpha_den = sp.m / g;
  return sp;
}

std::vector<int> equality_prefixes(const LosingScoreSequence& r) {
  std::vector<int> out;
  Score prefix = 0;
  for (int j = 1; j < r.n(); ++j) {
    prefix += r[j - 1];
    if (prefix == binom(j, r.k())) out.push_back(j);
  }
  return out;
}

CrossDistribution cross_distribution(const LosingScoreSequence& r, const SplitPoint& sp) {
  const int n = r.n();
  const int k = r.k();
  if (sp != make_split_point(r, sp.j)) {
    throw PreconditionViolation("split point does not belong to this sequence");
  }
  const auto cross = cross_subsets(n, k, sp.j);
  const Score base = sp.cross_total / sp.m;
  const int extra = static_cast<int>(sp.cross_total % sp.m);

  CrossDistribution found;
  const bool equal = for_each_ceil_placement(
      sp.m, extra, kMaxEqualShareCandidates, [&](const std::vector<int>& positions) {
        std::vector<Score> c(static_cast<std::size_t>(sp.m), base);
        for (int p : positions) ++c[p];
        if (!residual_valid(k, residual(r, sp.j, c))) return false;
        if (!assign_losers(n, cross, second_part_quota(n, sp.j, c))) return false;
        found.losses = std::move(c);
        found.equal_shares = true;
        return true;
      });
  if (equal) return found;

  // Joint assignment over every arc that is not inside the first part.
  std::vector<Subset> outside;
  for (Subset& s : k_subsets(n, k)) {
    if (side_of(s, sp.j) != Side::First) outside.push_back(std::move(s));
  }
  std::vector<Score> quota(static_cast<std::size_t>(n), 0);
  std::copy(r.values().begin() + sp.j, r.values().end(), quota.begin() + sp.j);
  const auto losers = assign_losers(n, outside, quota);
  if (!losers) {
    throw NoValidDistribution("no cross-loss distribution leaves a valid residual for j=" +
                              std::to_string(sp.j));
  }
  found.losses.assign(static_cast<std::size_t>(sp.m), 0);
  for (std::size_t i = 0; i < outside.size(); ++i) {
    if (side_of(outside[i], sp.j) == Side::Cross) ++found.losses[(*losers)[i] - sp.j];
  }
  found.equal_shares = false;
  return found;
}

Hypertournament split_realize(const LosingScoreSequence& r, const SplitPoint& sp) {
  const int n = r.n();
  const int k = r.k();
  if (sp != make_split_point(r, sp.j)) {
    throw PreconditionViolation("split point does not belong to this sequence");
  }
  require_valid(r);

  const std::vector<Score> head(r.values().begin(), r.values().begin() + sp.j);
  const Hypertournament first = realize(LosingScoreSequence(k, head));

  const CrossDistribution c = cross_distribution(r, sp);
  const auto second = realize_targets(k, residual(r, sp.j, c.losses));
  const auto cross = cross_subsets(n, k, sp.j);
  const auto cross_losers = assign_losers(n, cross, second_part_quota(n, sp.j, c.losses));
  if (!second || !cross_losers) {
    throw NoValidDistribution("chosen cross-loss distribution cannot be realized");
  }

  const LoserAssignment first_losers = to_loser_assignment(first);
  const LoserAssignment second_losers = to_loser_assignment(*second);
  const auto subsets = k_subsets(n, k);
  std::vector<Vertex> losers;
  losers.reserve(subsets.size());
  std::size_t next_cross = 0;
  for (const Subset& s : subsets) {
    switch (side_of(s, sp.j)) {
      case Side::First:
        losers.push_back(first_losers.loser_of(s));
        break;
      case Side::Second: {
        Subset shifted = s;
        for (Vertex& v : shifted) v -= sp.j;
        losers.push_back(second_losers.loser_of(shifted) + sp.j);
        break;
      }
      case Side::Cross:
        // cross_subsets() preserves lexicographic order.
        losers.push_back((*cross_losers)[next_cross++]);
        break;
    }
  }
  Hypertournament h = from_loser_assignment(LoserAssignment(n, k, std::move(losers)));
  post_check(h, r.values());
  return h;
}

ExchangePlan exchange_repair(const Hypertournament& h, Vertex x, Vertex y) {
  const int n = h.n();
  if (x < 0 || x >= n || y < 0 || y >= n) {
    throw PreconditionViolation("exchange vertices must lie in [0, n)");
  }
  const auto r = losing_score_vector(h);
  if (r[x] <= r[y]) {
    throw PreconditionViolation("donor " + std::to_string(x) + " has losing score " +
                                std::to_string(r[x]) + ", not above receiver " + std::to_string(y) +
                                " with " + std::to_string(r[y]));
  }

  for (const Arc& e : h.arcs()) {
    if (e.loser() == x && e.contains(y)) {
      return ExchangePlan{ExchangeKind::Single, {e}, {arc_swap(e, x, y)}, x, y};
    }
  }

  std::vector<std::size_t> by_rank(h.arcs().size());
  for (std::size_t i = 0; i < h.arcs().size(); ++i) by_rank[subset_rank(n, h.arcs()[i].subset())] = i;

  for (const Arc& e2 : h.arcs()) {
    if (e2.loser() != x || e2.contains(y)) continue;
    Subset partner = e2.subset();
    std::replace(partner.begin(), partner.end(), x, y);
    std::sort(partner.begin(), partner.end());
    const Arc& e1 = h.arcs()[by_rank[subset_rank(n, partner)]];
    if (e1.loser() == y) continue;
    const Vertex w = e1.loser();
    return ExchangePlan{ExchangeKind::Double, {e1, e2}, {arc_swap(e1, y, w), arc_swap(e2, w, x)}, x,
                        y};
  }
  throw NoExchangeFound("no single or double exchange moves a loss from " + std::to_string(x) +
                        " to " + std::to_string(y));
}

Hypertournament apply_plan(const Hypertournament& h, const ExchangePlan& plan) {
  if (plan.removed.size() != plan.added.size()) {
    throw InvariantViolation("exchange plan removes and adds different numbers of arcs");
  }
  std::vector<Arc> arcs = h.arcs();
  for (std::size_t i = 0; i < plan.removed.size(); ++i) {
    auto it = std::find(arcs.begin(), arcs.end(), plan.removed[i]);
    if (it == arcs.end()) throw ArcNotPresent("exchange plan removes an arc that is not present");
    if (it->subset() != plan.added[i].subset()) {
      throw InvariantViolation("replacement arc covers a different vertex set");
    }
    *it = plan.added[i];
  }
  return Hypertournament(h.n(), h.k(), std::move(arcs));
}

}  // namespace hypertour
