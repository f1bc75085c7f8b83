#pragma once

#include <stdexcept>
#include <string>

namespace schutz {

/// Malformed textual input (substitution or endomorphism files, group specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input outside its domain, e.g. a
/// non-primitive substitution passed to the return-word machinery.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object failed one of its own postconditions. This signals an
/// implementation bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schutz
