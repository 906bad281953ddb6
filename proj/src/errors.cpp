#include "nilsep/errors.hpp"

namespace nilsep {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnitriangular: return "NotUnitriangular";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::SpecRejected: return "SpecRejected";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ClassTooHigh: return "ClassTooHigh";
    case ErrorKind::NonAbelianPart: return "NonAbelianPart";
    case ErrorKind::AbelianGroup: return "AbelianGroup";
    case ErrorKind::NoZ2Rep: return "NoZ2Rep";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::LocalCheckFailed: return "LocalCheckFailed";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::AreConjugate: return "AreConjugate";
    case ErrorKind::IdentityElement: return "IdentityElement";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace nilsep
