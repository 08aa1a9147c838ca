#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stencil_dse {

// Every failure that crosses the library boundary derives from Error so the
// CLI can map the kind onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed input file (bad JSON, missing key, wrong type).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

// A domain invariant was violated; always names the offending field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error("ValidationError", field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// An operation was called outside its domain (wrong strategy, dimension
// mismatch, odd hexagon height, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("DomainError", message) {}
};

// Tile footprint fails the shared-memory capacity constraints.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& message) : Error("InfeasibleError", message) {}
};

// Iteration space too large for a brute-force oracle.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& message) : Error("SizeError", message) {}
};

// Degenerate or underdetermined calibration system.
class RankError : public Error {
 public:
  explicit RankError(const std::string& message) : Error("RankError", message) {}
};

// A fitted coefficient came out negative; the fit is rejected.
class NegativeCoeffError : public Error {
 public:
  explicit NegativeCoeffError(const std::string& message)
      : Error("NegativeCoeffError", message) {}
};

// No tile configuration passes the feasibility constraints.
class EmptyFeasibleSpace : public Error {
 public:
  explicit EmptyFeasibleSpace(const std::string& message)
      : Error("EmptyFeasibleSpace", message) {}
};

// No architecture fits the area budget.
class EmptyDesignSpace : public Error {
 public:
  explicit EmptyDesignSpace(const std::string& message)
      : Error("EmptyDesignSpace", message) {}
};

// An internal invariant broke; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("InternalError", message) {}
};

}  // namespace stencil_dse
