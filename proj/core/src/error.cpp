#include "polygauss/error.hpp"

namespace polygauss {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::DegenerateTetrahedron: return "DegenerateTetrahedron";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotATetrahedron: return "NotATetrahedron";
    case ErrorCode::NotALatticePolytope: return "NotALatticePolytope";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::EvenInput: return "EvenInput";
    case ErrorCode::VolumeNotMinimal: return "VolumeNotMinimal";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UndefinedCase: return "UndefinedCase";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace polygauss
