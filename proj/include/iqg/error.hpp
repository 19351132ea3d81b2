#pragma once

#include <stdexcept>
#include <string>

namespace iqg {

enum class ErrorKind {
  // satake
  NotADE,
  TauNotInvolution,
  TauNotAutomorphism,
  NotInCorootLattice,
  NegativeMultiplicity,
  NotDominant,
  IncompatibleOrientation,
  ThetaOutsideFixedSet,
  AdjacentThetas,
  // exactscalar
  DivisionByZero,
  DenominatorVanishes,
  // qtorus
  LocalizationViolation,
  // deltacalc
  DoublePin,
  NonSimplePole,
  UnpinnedResidual,
  // igklo
  WrongCase,
  DegreeMismatch,
  // oracle
  BadSpecialization,
  // cli
  ParseError,
  ValidationError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace iqg
