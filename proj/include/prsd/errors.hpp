#pragma once

#include <stdexcept>
#include <string>

namespace prsd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation was asked for a variable the assignment does not cover.
struct MissingVariable : Error {
  explicit MissingVariable(const std::string& var)
      : Error("missing variable in assignment: " + var) {}
};

// A denominator evaluated to zero; callers typically resample.
struct ZeroDenominator : Error {
  ZeroDenominator() : Error("zero denominator") {}
  explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

// Linear system has no solution.
struct Inconsistent : Error {
  Inconsistent() : Error("inconsistent linear system") {}
};

// A germ of insufficient order was supplied.
struct OrderTooLow : Error {
  explicit OrderTooLow(int need, int have)
      : Error("germ order too low: need " + std::to_string(need) + ", have " +
              std::to_string(have)) {}
};

// A random sample hit a singular configuration; retry budget exhausted
// turns this into a hard error distinct from a check failure.
struct DegenerateSample : Error {
  DegenerateSample() : Error("degenerate sample") {}
  explicit DegenerateSample(const std::string& what) : Error(what) {}
};

// Jacobian (Tresse frame or pseudo-group) singular at the evaluation point.
struct SingularJacobian : Error {
  SingularJacobian() : Error("singular jacobian") {}
};

struct ZeroG44 : Error {
  ZeroG44() : Error("G44 vanishes at the sampled germ") {}
};

// Symmetry-family parameter involves a forbidden variable.
struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error(what) {}
};

}  // namespace prsd
