#pragma once

#include <stdexcept>
#include <string>

namespace nilsep {

// Every failure the library reports is an Error subclass; the CLI maps
// the kind() onto its exit-code contract.
enum class ErrorKind {
  NotCoprime,
  DimensionMismatch,
  NotUnitriangular,
  NotInLattice,
  SpecRejected,
  SizeLimit,
  ClassTooHigh,
  NonAbelianPart,
  AbelianGroup,
  NoZ2Rep,
  VerificationFailed,
  LocalCheckFailed,
  NotApplicable,
  AreConjugate,
  IdentityElement,
  PreconditionViolated,
  ModulusTooLarge,
  InvalidTable,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nilsep
