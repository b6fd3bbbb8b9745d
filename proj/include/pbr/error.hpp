#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace pbr {

/// Root of every error raised by the toolchain.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Frontend failure: syntax, sort, undeclared variable or literal range.
class LangError : public Error {
 public:
  enum class Kind { Syntax, Sort, Undeclared, Range };

  LangError(Kind kind, int line, int column, const std::string& what)
      : Error(format(line, column, what)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(int line, int column, const std::string& what) {
    if (line <= 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  Kind kind_;
  int line_;
  int column_;
};

/// The requested fault region cannot be used as a repair site.
class RegionError : public Error {
 public:
  using Error::Error;
};

/// A counterexample path does not traverse the fault region.
class RegionNotOnPath : public Error {
 public:
  using Error::Error;
};

/// A path was cut off at the unroll bound while still feasible.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// The BDD arena hit its node cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// No repair exists for the accumulated relation. Carries a region-entry
/// valuation for which no output assignment satisfies it.
class Unrealizable : public Error {
 public:
  Unrealizable(const std::string& what, std::map<std::string, unsigned long long> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::map<std::string, unsigned long long>& witness() const { return witness_; }

 private:
  std::map<std::string, unsigned long long> witness_;
};

/// A broken internal guarantee (monotonicity, soundness post-check, iteration cap).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pbr
