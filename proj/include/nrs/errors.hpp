#pragma once

#include <stdexcept>
#include <string>

namespace nrs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The per-step system (I - G) J = rhs of an NRS iteration could not be solved.
class SingularSystem : public Error {
 public:
  SingularSystem(int step, const std::string& what) : Error(what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidWord : public Error {
 public:
  enum class Condition { LetterIsOne, NegativePrefix, WrongTotal, Empty };

  InvalidWord(Condition condition, std::size_t index, const std::string& what)
      : Error(what), condition_(condition), index_(index) {}

  Condition condition() const noexcept { return condition_; }
  /// 1-based position of the first violation.
  std::size_t index() const noexcept { return index_; }

 private:
  Condition condition_;
  std::size_t index_;
};

class IncompleteSequence : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OddPowerResidual : public Error {
 public:
  using Error::Error;
};

class DerivativeZero : public Error {
 public:
  using Error::Error;
};

/// f_{m-1,m} only exists without empty subtrees.
class SOnFinal : public Error {
 public:
  using Error::Error;
};

}  // namespace nrs
