#pragma once

#include <stdexcept>
#include <string>

namespace symfun {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial") {}
};

class PoleAtRootOfUnity : public Error {
 public:
  explicit PoleAtRootOfUnity(int k)
      : Error("pole at a primitive " + std::to_string(k) + "-th root of unity") {}
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotARibbon : public Error {
 public:
  using Error::Error;
};

/// Raised by cell-based predicates on skew shapes whose inner shape is not contained in the outer one.
class ContainmentRequired : public Error {
 public:
  using Error::Error;
};

class UnsupportedCombination : public Error {
 public:
  using Error::Error;
};

class GradingViolation : public Error {
 public:
  GradingViolation(int index, const std::string& what)
      : Error("grading violation at n=" + std::to_string(index) + ": " + what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symfun
