#include "hypertour/binom.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "hypertour/errors.hpp"

namespace hypertour {

std::optional<std::int64_t> checked_binom(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0) {
    throw std::invalid_argument("binom: negative argument (" + std::to_string(p) + ", " +
                                std::to_string(q) + ")");
  }
  if (p < q) return 0;
  q = std::min(q, p - q);
  // After step i, result == C(p - q + i, i); dividing out gcd first keeps
  // the intermediate product no larger than the final value allows.
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= q; ++i) {
    std::int64_t factor = p - q + i;
    const std::int64_t g = std::gcd(result, i);
    result /= g;
    factor /= i / g;
    if (__builtin_mul_overflow(result, factor, &result)) return std::nullopt;
  }
  return result;
}

std::int64_t binom(std::int64_t p, std::int64_t q) {
  auto value = checked_binom(p, q);
  if (!value) {
    throw ArithmeticOverflow("binom(" + std::to_string(p) + ", " + std::to_string(q) +
                             ") exceeds 64-bit range");
  }
  return *value;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) return std::nullopt;
  }
  return result;
}

}  // namespace hypertour
