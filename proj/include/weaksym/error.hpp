#pragma once

#include <stdexcept>
#include <string>

namespace weaksym {

enum class Errc {
  DegenerateExpression,
  SubstitutionCycle,
  NotPolynomial,
  PoleAtPoint,
  IncompleteAssignment,
  SyntaxError,
  UnknownSymbol,
  NotPointGenerator,
  NotQuasiLinear,
  UnsupportedGenerator,
  UnsupportedEquation,
  InvalidInvariants,
  InvalidCandidate,
  NonlinearSystem,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DegenerateExpression: return "DegenerateExpression";
    case Errc::SubstitutionCycle: return "SubstitutionCycle";
    case Errc::NotPolynomial: return "NotPolynomial";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::IncompleteAssignment: return "IncompleteAssignment";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::NotPointGenerator: return "NotPointGenerator";
    case Errc::NotQuasiLinear: return "NotQuasiLinear";
    case Errc::UnsupportedGenerator: return "UnsupportedGenerator";
    case Errc::UnsupportedEquation: return "UnsupportedEquation";
    case Errc::InvalidInvariants: return "InvalidInvariants";
    case Errc::InvalidCandidate: return "InvalidCandidate";
    case Errc::NonlinearSystem: return "NonlinearSystem";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace weaksym
