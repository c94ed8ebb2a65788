#pragma once

// Error surface shared by all modules. Mathematical refutations are not
// errors; they travel in reports. Errors are contract violations.

#include <stdexcept>
#include <string>

namespace goodrep {

enum class Errc {
  MixedContext,
  DivisionByZero,
  NotInvertible,
  ParseError,
  InvalidModulus,
  InvalidArgument,
  CharacteristicZero,
  IndexOutOfRange,
  DimensionMismatch,
  NotSquare,
  SingularMatrix,
  NotBijection,
  EmptyInput,
  CapExceeded,
  EmptyU,
  NotDiagonalizable,
  SingularA,
  AmbiguousWeights,
  WrongDegree,
  NotInvariant,
  TwistedGeneratorNotInGroup,
  NoInvertibleComponent,
  FieldTooSmall,
  SingularChoice,
  AsymmetricInput,
  NotSubgroup,
  NotNormal,
  NotHInvariant,
  HypothesisFailed,
  HomomorphismViolation,
  NonpositiveWeight,
  NoPositiveWeightSupport,
  UnknownSuite,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::MixedContext: return "MixedContext";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CharacteristicZero: return "CharacteristicZero";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotBijection: return "NotBijection";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::EmptyU: return "EmptyU";
    case Errc::NotDiagonalizable: return "NotDiagonalizable";
    case Errc::SingularA: return "SingularA";
    case Errc::AmbiguousWeights: return "AmbiguousWeights";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::TwistedGeneratorNotInGroup: return "TwistedGeneratorNotInGroup";
    case Errc::NoInvertibleComponent: return "NoInvertibleComponent";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::SingularChoice: return "SingularChoice";
    case Errc::AsymmetricInput: return "AsymmetricInput";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotHInvariant: return "NotHInvariant";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::HomomorphismViolation: return "HomomorphismViolation";
    case Errc::NonpositiveWeight: return "NonpositiveWeight";
    case Errc::NoPositiveWeightSupport: return "NoPositiveWeightSupport";
    case Errc::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace goodrep
