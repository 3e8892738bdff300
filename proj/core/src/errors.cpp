#include "tropsolve/errors.hpp"

namespace tropsolve {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BalancedSum: return "BalancedSum";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::MultipleCandidates: return "MultipleCandidates";
    case ErrorCode::NoUniqueMin: return "NoUniqueMin";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::TiedPayoff: return "TiedPayoff";
    case ErrorCode::MissingArc: return "MissingArc";
    case ErrorCode::InvalidGame: return "InvalidGame";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IdenticallyZero: return "IdenticallyZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ArgError: return "ArgError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace tropsolve
