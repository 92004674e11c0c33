#pragma once

#include <stdexcept>

namespace salg {

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Triviality of invariants is only decidable here for S_n and for
/// groups generated by a single transposition.
class UnsupportedSubgroup : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug in the library.
class VerificationFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace salg
