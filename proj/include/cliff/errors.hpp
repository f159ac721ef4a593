#pragma once

#include <stdexcept>
#include <string>

namespace cliff {

// Base class for every contract failure the library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct NotInvertible : Error {
  NotInvertible() : Error("element is not invertible") {}
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

// Anticommutation relation gamma^a gamma^b + gamma^b gamma^a = 2 eta^{ab} e
// failed for the pair (a, b). Indices are 1-based.
struct RelationViolation : Error {
  int a;
  int b;
  double residual;
  RelationViolation(int a_, int b_, double residual_)
      : Error("anticommutation relation violated for pair (" + std::to_string(a_) + "," +
              std::to_string(b_) + "), residual " + std::to_string(residual_)),
        a(a_),
        b(b_),
        residual(residual_) {}
};

struct UnclassifiableVolume : Error {
  UnclassifiableVolume() : Error("volume element matches no admissible classification") {}
};

struct OddDimensionRequired : Error {
  OddDimensionRequired() : Error("operation requires odd n") {}
};

struct SignatureMismatch : Error {
  explicit SignatureMismatch(const std::string& what) : Error(what) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct NoCandidateFound : Error {
  NoCandidateFound() : Error("all candidates gave a vanishing (or singular) average") {}
};

struct VerificationFailed : Error {
  double residual;
  explicit VerificationFailed(double residual_)
      : Error("intertwiner verification failed, residual " + std::to_string(residual_)),
        residual(residual_) {}
};

struct UnclassifiableCase : Error {
  UnclassifiableCase() : Error("central factor matches no admissible case") {}
};

struct AdmissibilityError : Error {
  explicit AdmissibilityError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace cliff
