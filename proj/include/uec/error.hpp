#pragma once

#include <stdexcept>
#include <string>

namespace uec {

/// Malformed input data or an invalid argument supplied by a caller.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside the domain on which it is defined
/// (e.g. a criticality test on a graph that is not uniquely 3-colorable).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A property that is a theorem for the input class failed on a concrete
/// instance. Either the instance is outside the class or the toolkit is wrong.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uec
