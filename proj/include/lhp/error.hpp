#pragma once

#include <stdexcept>
#include <string>

namespace lhp {

/// Malformed arguments: bad labels, cyclic relations, colors out of range.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured cap.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer Ehrhart counts than the polynomial degree requires.
class insufficient_data : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Counts whose generating function is not A(t)/(1-t)^(p+1) with deg A <= p.
class not_polynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object violates a proven property; indicates a bug.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lhp
