#pragma once

#include <cstdint>
#include <optional>

namespace hypertour {

/// Exact binomial coefficient C(p, q) with C(p, q) = 0 for p < q.
/// Throws std::invalid_argument for negative arguments and
/// ArithmeticOverflow if the result does not fit in 64 bits.
std::int64_t binom(std::int64_t p, std::int64_t q);

/// Same as binom() but reports overflow as an empty optional.
std::optional<std::int64_t> checked_binom(std::int64_t p, std::int64_t q);

/// base^exp, empty on overflow of uint64.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace hypertour
