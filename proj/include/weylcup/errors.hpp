#pragma once

#include <stdexcept>
#include <string>

namespace weylcup {

// Base for all library errors.  DomainError maps to CLI exit code 2,
// BudgetError (a configured cap was exceeded) to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct BudgetError : Error {
  using Error::Error;
};

#define WEYLCUP_DOMAIN_ERROR(NAME)       \
  struct NAME : DomainError {            \
    using DomainError::DomainError;      \
  }

#define WEYLCUP_BUDGET_ERROR(NAME)       \
  struct NAME : BudgetError {            \
    using BudgetError::BudgetError;      \
  }

WEYLCUP_DOMAIN_ERROR(UnsupportedType);
WEYLCUP_DOMAIN_ERROR(InvalidRank);
WEYLCUP_DOMAIN_ERROR(RootNotInSystem);
WEYLCUP_DOMAIN_ERROR(BadIndex);
WEYLCUP_DOMAIN_ERROR(NotDominant);
WEYLCUP_DOMAIN_ERROR(SingularWeight);
WEYLCUP_DOMAIN_ERROR(SumMismatch);
WEYLCUP_DOMAIN_ERROR(SumNotZero);
WEYLCUP_DOMAIN_ERROR(ZeroIntersection);
WEYLCUP_DOMAIN_ERROR(NoWitness);
WEYLCUP_DOMAIN_ERROR(InvalidDatum);
WEYLCUP_DOMAIN_ERROR(NotSaturated);
WEYLCUP_DOMAIN_ERROR(OrderIncompatible);
WEYLCUP_DOMAIN_ERROR(NotACycle);
WEYLCUP_DOMAIN_ERROR(ParseError);

WEYLCUP_BUDGET_ERROR(GroupTooLarge);
WEYLCUP_BUDGET_ERROR(SearchTooLarge);
WEYLCUP_BUDGET_ERROR(DimensionOverBudget);

#undef WEYLCUP_DOMAIN_ERROR
#undef WEYLCUP_BUDGET_ERROR

}  // namespace weylcup
