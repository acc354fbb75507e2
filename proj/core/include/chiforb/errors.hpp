#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chiforb {

// Every library failure carries one of these codes. Input-shape problems
// (loops, digons, bad vertices, bad parameters) are caller errors; NotInClass
// means a validated class precondition failed and the message names a witness;
// StructureViolation means a structural claim that should hold for every class
// member failed at runtime, so the offending instance is worth keeping.
enum class ErrorCode {
  LoopArc,
  DigonArc,
  VertexOutOfRange,
  SizeMismatch,
  TooLarge,
  PatternTooLarge,
  NotStable,
  NotDisjoint,
  BadTau,
  BadInterval,
  BadSpec,
  NotAcyclic,
  NotTournament,
  NotATree,
  NotInClass,
  StructureViolation,
  OddCycleFound,
  BudgetExhausted,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::string detail_json = "")
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        detail_(std::move(detail_json)) {}

  ErrorCode code() const { return code_; }

  // JSON payload with machine-readable context (witness embedding, offending
  // arc, partial cycle, ...). Empty when the message alone suffices.
  const std::string& detail_json() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::DigonArc: return "DigonArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::BadTau: return "BadTau";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotTournament: return "NotTournament";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::OddCycleFound: return "OddCycleFound";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
  }
  return "UnknownError";
}

}  // namespace chiforb
