#include "centroflow/types.hpp"

namespace centroflow {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::DegenerateDeterminant: return "DegenerateDeterminant";
    case ErrorCode::DegenerateSeed: return "DegenerateSeed";
    case ErrorCode::DegenerateResult: return "DegenerateResult";
    case ErrorCode::SingularChain: return "SingularChain";
    case ErrorCode::SingularTransfer: return "SingularTransfer";
    case ErrorCode::InsufficientSignature: return "InsufficientSignature";
    case ErrorCode::InvalidPeriod: return "InvalidPeriod";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::Not2D: return "Not2D";
    case ErrorCode::Not3D: return "Not3D";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::ZeroBeta: return "ZeroBeta";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroKappaBar: return "ZeroKappaBar";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InadmissibleInput: return "InadmissibleInput";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& message, int index) {
  std::string full = std::string(error_code_name(code)) + ": " + message;
  if (index >= 0) full += " (vertex " + std::to_string(index) + ")";
  throw Error(code, full, index);
}

}  // namespace centroflow
