#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewdual {

enum class ErrorKind {
  CompositeCharacteristic,
  ReducibleModulus,
  FieldTooLarge,
  DivisionByZero,
  NonDivisorDegree,
  NotABasis,
  NormNotOne,
  MixedRings,
  ZeroInput,
  WrongConvention,
  DimensionMismatch,
  AnnihilatorCertificateInvalid,
  NotDirectSummand,
  OrderMismatch,
  NotFixedUnit,
  NotALeftDivisor,
  NotMonic,
  NotNormal,
  BadDelta,
  CodeTooLarge,
  ZeroCode,
  SingularU,
  BasisNotSelfDualNormal,
  BadCertificate,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so the
/// CLI can report it by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& detail) {
  if (!cond) throw Error(kind, detail);
}

}  // namespace skewdual
