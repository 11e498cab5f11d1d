#pragma once

#include <stdexcept>
#include <string>

namespace hypertour {

/// Base of every error raised by the library. Each subclass names one
/// contract failure so callers (and the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYPERTOUR_ERROR(Name)            \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

HYPERTOUR_ERROR(ArithmeticOverflow);
HYPERTOUR_ERROR(InvariantViolation);
HYPERTOUR_ERROR(MalformedHypertournament);
HYPERTOUR_ERROR(EntryOutOfRange);
HYPERTOUR_ERROR(WrongK);
HYPERTOUR_ERROR(InfeasibleSequence);
HYPERTOUR_ERROR(PreconditionViolation);
HYPERTOUR_ERROR(NoValidDistribution);
HYPERTOUR_ERROR(VertexNotInArc);
HYPERTOUR_ERROR(NoExchangeFound);
HYPERTOUR_ERROR(ArcNotPresent);
HYPERTOUR_ERROR(BudgetExceeded);

#undef HYPERTOUR_ERROR

}  // namespace hypertour
