#pragma once

#include <stdexcept>
#include <string>

namespace placement {

// Raised when an operation's precondition on the instance shape is not met
// (non-line browsing for a line algorithm, non-uniform prices, wrong model).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact evaluation requested on a browsing distribution that only samples.
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive enumeration refused because the search space is too large.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance / report JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace placement
