#include "skewdual/error.hpp"

namespace skewdual {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonDivisorDegree: return "NonDivisorDegree";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::NormNotOne: return "NormNotOne";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::WrongConvention: return "WrongConvention";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AnnihilatorCertificateInvalid: return "AnnihilatorCertificateInvalid";
    case ErrorKind::NotDirectSummand: return "NotDirectSummand";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NotFixedUnit: return "NotFixedUnit";
    case ErrorKind::NotALeftDivisor: return "NotALeftDivisor";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::BadDelta: return "BadDelta";
    case ErrorKind::CodeTooLarge: return "CodeTooLarge";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::SingularU: return "SingularU";
    case ErrorKind::BasisNotSelfDualNormal: return "BasisNotSelfDualNormal";
    case ErrorKind::BadCertificate: return "BadCertificate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace skewdual
