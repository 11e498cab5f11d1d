#include "hypertour/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypertour/binom.hpp"
#include "hypertour/errors.hpp"

namespace hypertour {

std::optional<std::uint64_t> assignment_count(int n, int k) {
  if (n < k) return 1;
  const auto arcs = checked_binom(n, k);
  if (!arcs) return std::nullopt;
  return checked_pow(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(*arcs));
}

void check_budget(int n, int k, std::uint64_t budget) {
  if (n < 0 || k < 2) throw InvariantViolation("enumeration needs n >= 0 and k >= 2");
  const auto count = assignment_count(n, k);
  if (!count || *count > budget) {
    throw BudgetExceeded(std::to_string(k) + "^C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") assignments exceed the budget of " + std::to_string(budget));
  }
}

AssignmentEnumerator::AssignmentEnumerator(int n, int k, std::uint64_t budget)
    : n_(n), k_(k), subsets_(k_subsets(n, k)), digits_(subsets_.size(), 0) {
  check_budget(n, k, budget);
}

LoserAssignment AssignmentEnumerator::current() const {
  std::vector<Vertex> losers(subsets_.size());
  for (std::size_t i = 0; i < subsets_.size(); ++i) losers[i] = subsets_[i][digits_[i]];
  return LoserAssignment(n_, k_, std::move(losers));
}

bool AssignmentEnumerator::next() {
  for (int& digit : digits_) {
    if (++digit < k_) return true;
    digit = 0;
  }
  return false;
}

std::uint64_t for_each_assignment(int n, int k,
                                  const std::function<void(const LoserAssignment&)>& fn,
                                  std::uint64_t budget) {
  AssignmentEnumerator it(n, k, budget);
  std::uint64_t visited = 0;
  do {
    fn(it.current());
    ++visited;
  } while (it.next());
  return visited;
}

SequenceSet achievable_losing_multisets_serial(int n, int k, std::uint64_t budget) {
  SequenceSet out;
  for_each_assignment(
      n, k,
      [&](const LoserAssignment& a) { out.insert(LosingScoreSequence(k, a.losing_score_vector())); },
      budget);
  return out;
}

namespace {

// A sorted score vector is determined by how many vertices hold each value,
// so the key is that histogram, `bits` per bucket, bucket v at bit v*bits.
// Raising one vertex's score from a to a+1 moves one count between adjacent
// buckets: key += (1 << (a+1)*bits) - (1 << a*bits).
struct HistogramKey {
  int n;
  Score max_score;
  int bits;

  [[nodiscard]] bool fits() const { return (max_score + 1) * bits <= 64; }

  [[nodiscard]] std::uint64_t unit(Score value) const {
    return std::uint64_t{1} << (value * bits);
  }

  [[nodiscard]] std::vector<Score> unpack(std::uint64_t key) const {
    std::vector<Score> values;
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (Score v = 0; v <= max_score; ++v) {
      values.insert(values.end(), (key >> (v * bits)) & mask, v);
    }
    return values;
  }
};

}  // namespace

SequenceSet achievable_losing_multisets(int n, int k, std::uint64_t budget) {
  check_budget(n, k, budget);
  if (n < k) return {LosingScoreSequence(k, std::vector<Score>(static_cast<std::size_t>(n), 0))};

  const HistogramKey hist{n, binom(n - 1, k - 1),
                          static_cast<int>(std::bit_width(static_cast<unsigned>(n)))};
  if (!hist.fits()) return achievable_losing_multisets_serial(n, k, budget);

  const auto subsets = k_subsets(n, k);
  const int digits = static_cast<int>(subsets.size());
  // The top `fixed` digits index independent blocks; the rest run inside a
  // block. Aim for enough blocks to balance a dynamic schedule.
  int fixed = 0;
  std::uint64_t blocks = 1;
  while (fixed < digits && blocks < 256) {
    ++fixed;
    blocks *= static_cast<std::uint64_t>(k);
  }
  const int free_digits = digits - fixed;

  std::unordered_set<std::uint64_t> merged;

#pragma omp parallel
  {
    std::unordered_set<std::uint64_t> local;
    std::vector<Score> scores(static_cast<std::size_t>(n));
    std::vector<int> digit(static_cast<std::size_t>(digits));
    std::uint64_t key = 0;

    auto raise = [&](Vertex v) {
      key += hist.unit(scores[v] + 1) - hist.unit(scores[v]);
      ++scores[v];
    };
    auto lower = [&](Vertex v) {
      key -= hist.unit(scores[v]) - hist.unit(scores[v] - 1);
      --scores[v];
    };

#pragma omp for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      std::fill(scores.begin(), scores.end(), 0);
      std::fill(digit.begin(), digit.end(), 0);
      key = static_cast<std::uint64_t>(n) * hist.unit(0);
      auto rest = static_cast<std::uint64_t>(b);
      for (int d = free_digits; d < digits; ++d) {
        digit[d] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
        rest /= static_cast<std::uint64_t>(k);
      }
      for (int d = 0; d < digits; ++d) raise(subsets[d][digit[d]]);

      std::uint64_t last = ~std::uint64_t{0};
      while (true) {
        if (key != last) {
          local.insert(key);
          last = key;
        }
        int d = 0;
        for (; d < free_digits; ++d) {
          const Subset& s = subsets[d];
          lower(s[digit[d]]);
          if (++digit[d] < k) {
            raise(s[digit[d]]);
            break;
          }
          digit[d] = 0;
          raise(s[0]);
        }
        if (d == free_digits) break;
      }
    }

#pragma omp critical
    merged.insert(local.begin(), local.end());
  }

  SequenceSet out;
  for (std::uint64_t key : merged) out.insert(LosingScoreSequence(k, hist.unpack(key)));
  return out;
}

SequenceSet reachable_losing_multisets(int n, int k) {
  if (n < 0 || k < 2) throw InvariantViolation("enumeration needs n >= 0 and k >= 2");
  std::set<std::vector<Score>> frontier{std::vector<Score>(static_cast<std::size_t>(n), 0)};
  for (const Subset& s : k_subsets(n, k)) {
    std::set<std::vector<Score>> next;
    for (const auto& state : frontier) {
      for (Vertex v : s) {
        auto grown = state;
        ++grown[v];
        next.insert(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  SequenceSet out;
  for (const auto& state : frontier) out.insert(LosingScoreSequence(k, state));
  return out;
}

namespace {

void extend_valid(int n, int k, Score total, std::vector<Score>& prefix_values, Score prefix,
                  SequenceSet& out) {
  const int j = static_cast<int>(prefix_values.size());
  if (j == n) {
    if (prefix == total) out.insert(LosingScoreSequence(k, prefix_values));
    return;
  }
  const Score low = prefix_values.empty() ? 0 : prefix_values.back();
  const int remaining = n - j;
  // Every later entry is at least v, so remaining * v must fit in what is left.
  for (Score v = low; prefix + v * remaining <= total; ++v) {
    const Score next = prefix + v;
    if (j + 1 < n && next < binom(j + 1, k)) continue;
    prefix_values.push_back(v);
    extend_valid(n, k, total, prefix_values, next, out);
    prefix_values.pop_back();
  }
}

}  // namespace

SequenceSet enumerate_valid(int n, int k) {
  if (n < 0 || k < 2) throw InvariantViolation("enumeration needs n >= 0 and k >= 2");
  SequenceSet out;
  std::vector<Score> values;
  extend_valid(n, k, binom(n, k), values, 0, out);
  return out;
}

}  // namespace hypertour
