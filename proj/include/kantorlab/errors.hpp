#pragma once

#include <stdexcept>
#include <string>

namespace kantorlab {

enum class Errc {
  DivisionByZero,
  MixedFields,
  NotAvailable,
  BadDimension,
  MixedAlgebras,
  PreconditionViolated,
  ExcludedCase,
  OrderViolation,
  NotKantorCompatible,
  InconsistentGrading,
  NotAnAutomorphism,
  TooLarge,
  GeneratorNotHomogeneous,
  NotDiagonalizable,
  NotAGrading,
  GradingMissing,
  UnknownSuite,
  InvalidCombination,
  MismatchAgainstPaper,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace kantorlab
