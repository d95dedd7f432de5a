#pragma once

#include <stdexcept>
#include <string>

namespace rpk {

/// Machine-readable identity of a failure; the message carries the details.
enum class Code {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  NotALattice,
  CapExceeded,
  NotPseudocomplemented,
  NotDuallyPseudocomplemented,
  AxiomViolation,
  PreconditionViolated,
  NotAnEquivalence,
  NotAQuasiorder,
  NotACovering,
  NotIrredundant,
  NotAnUpset,
  InvalidSpace,
  NotDistributive,
  NotRegular,
  NotAPrimeFilter,
  NoWitnessWithinBudget,
  KindMismatch,
  ParseError,
  TableMismatch,
  // The next two signal implementation bugs, not mathematical possibilities.
  ClosureViolation,
  TheoremViolation,
};

inline const char* code_name(Code c) {
  switch (c) {
    case Code::DuplicateLabel: return "DuplicateLabel";
    case Code::UnknownLabel: return "UnknownLabel";
    case Code::CycleDetected: return "CycleDetected";
    case Code::NotALattice: return "NotALattice";
    case Code::CapExceeded: return "CapExceeded";
    case Code::NotPseudocomplemented: return "NotPseudocomplemented";
    case Code::NotDuallyPseudocomplemented:
      return "NotDuallyPseudocomplemented";
    case Code::AxiomViolation: return "AxiomViolation";
    case Code::PreconditionViolated: return "PreconditionViolated";
    case Code::NotAnEquivalence: return "NotAnEquivalence";
    case Code::NotAQuasiorder: return "NotAQuasiorder";
    case Code::NotACovering: return "NotACovering";
    case Code::NotIrredundant: return "NotIrredundant";
    case Code::NotAnUpset: return "NotAnUpset";
    case Code::InvalidSpace: return "InvalidSpace";
    case Code::NotDistributive: return "NotDistributive";
    case Code::NotRegular: return "NotRegular";
    case Code::NotAPrimeFilter: return "NotAPrimeFilter";
    case Code::NoWitnessWithinBudget: return "NoWitnessWithinBudget";
    case Code::KindMismatch: return "KindMismatch";
    case Code::ParseError: return "ParseError";
    case Code::TableMismatch: return "TableMismatch";
    case Code::ClosureViolation: return "ClosureViolation";
    case Code::TheoremViolation: return "TheoremViolation";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(Code::ParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rpk
