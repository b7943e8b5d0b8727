#include "kantorlab/errors.hpp"

namespace kantorlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NotAvailable: return "NotAvailable";
    case Errc::BadDimension: return "BadDimension";
    case Errc::MixedAlgebras: return "MixedAlgebras";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ExcludedCase: return "ExcludedCase";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::NotKantorCompatible: return "NotKantorCompatible";
    case Errc::InconsistentGrading: return "InconsistentGrading";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::TooLarge: return "TooLarge";
    case Errc::GeneratorNotHomogeneous: return "GeneratorNotHomogeneous";
    case Errc::NotDiagonalizable: return "NotDiagonalizable";
    case Errc::NotAGrading: return "NotAGrading";
    case Errc::GradingMissing: return "GradingMissing";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::InvalidCombination: return "InvalidCombination";
    case Errc::MismatchAgainstPaper: return "MismatchAgainstPaper";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace kantorlab
