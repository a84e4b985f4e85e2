#include "fintop/error.hpp"

namespace fintop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::not_closed_under_union: return "NotClosedUnderUnion";
    case ErrorCode::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case ErrorCode::missing_empty_or_full: return "MissingEmptyOrFull";
    case ErrorCode::not_continuous: return "NotContinuous";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::not_open: return "NotOpen";
    case ErrorCode::not_algebra: return "NotAlgebra";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::not_a_frame: return "NotAFrame";
    case ErrorCode::invalid_category: return "InvalidCategory";
    case ErrorCode::not_idempotent: return "NotIdempotent";
    case ErrorCode::not_a_split_pair: return "NotASplitPair";
    case ErrorCode::alpha_not_preserved: return "AlphaNotPreserved";
    case ErrorCode::theorem_violation: return "TheoremViolation";
  }
  return "Unknown";
}

}  // namespace fintop
