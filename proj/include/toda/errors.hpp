#pragma once

#include <stdexcept>
#include <string>

namespace toda {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad JSON, bad CLI arguments,
// violated preconditions that are the caller's responsibility).
struct BadInput : Error {
  using Error::Error;
};

// Arithmetic between values of different base fields (Q vs Q(T)).
struct FieldMismatch : BadInput {
  explicit FieldMismatch(const std::string& what) : BadInput(what) {}
};

struct DivisionByZero : BadInput {
  using BadInput::BadInput;
};

// The discrete flow left its birational domain.  This is an expected
// outcome on a measure-zero set of states, not a bug; callers that
// sample random states resample on it.
struct DomainExit : Error {
  enum class Reason { zero_entry, vanishing_denominator, zero_next_entry };
  Reason reason;
  int index;  // 1-based lattice site, 0 if not applicable

  DomainExit(Reason r, int i, const std::string& what)
      : Error(what), reason(r), index(i) {}
};

// An identity the theory guarantees failed to hold.  Always a bug
// (ours or a misuse that slipped past validation), never a domain
// condition.
struct IdentityViolation : Error {
  using Error::Error;
};

}  // namespace toda
