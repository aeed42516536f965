#ifndef JSTRETCH_ERRORS_HPP
#define JSTRETCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jst {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

/// Raised when a Groebner basis computation would pass the configured degree cap.
class DegreeBoundExceeded : public Error {
 public:
  explicit DegreeBoundExceeded(int degree)
      : Error("degree bound exceeded (degree " + std::to_string(degree) + ")"), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// A bounded search (reduction number, nilpotency index, ...) ran out of room.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotContainedInMaximal : public Error {
 public:
  NotContainedInMaximal() : Error("ideal is not contained in the maximal ideal of the origin") {}
};

class NotLocallyContained : public Error {
 public:
  NotLocallyContained() : Error("quotient_length: B is not contained in A locally at the origin") {}
};

class NotMPrimary : public Error {
 public:
  NotMPrimary() : Error("ideal is not primary to the maximal ideal") {}
};

class NotAReduction : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  NotHomogeneous() : Error("presentation ideal is not homogeneous in the standard grading") {}
};

class WitnessNotFound : public Error {
 public:
  WitnessNotFound() : Error("no element spans I^2/(JI+I^3); witness search exhausted") {}
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace jst

#endif
