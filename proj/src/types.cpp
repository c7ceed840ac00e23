#include "sgt/types.hpp"

namespace sgt {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::associativity_violation:
        return "AssociativityViolation";
      case ErrorKind::range_error:
        return "RangeError";
      case ErrorKind::degree_mismatch:
        return "DegreeMismatch";
      case ErrorKind::not_an_ideal:
        return "NotAnIdeal";
      case ErrorKind::not_two_sided:
        return "NotTwoSided";
      case ErrorKind::cap_exceeded:
        return "CapExceeded";
      case ErrorKind::invalid_group:
        return "InvalidGroup";
      case ErrorKind::ragged_matrix:
        return "RaggedMatrix";
      case ErrorKind::mismatched_input:
        return "MismatchedInput";
      case ErrorKind::not_completely_simple:
        return "NotCompletelySimple";
      case ErrorKind::not_completely_regular:
        return "NotCompletelyRegular";
      case ErrorKind::not_commutative:
        return "NotCommutative";
      case ErrorKind::not_generating:
        return "NotGenerating";
      case ErrorKind::not_monoids:
        return "NotMonoids";
      case ErrorKind::not_homomorphism:
        return "NotHomomorphism";
      case ErrorKind::not_surjective:
        return "NotSurjective";
      case ErrorKind::no_internal_identity:
        return "NoInternalIdentity";
      case ErrorKind::not_refinement:
        return "NotRefinement";
      case ErrorKind::not_closed:
        return "NotClosed";
      case ErrorKind::size_limit_exceeded:
        return "SizeLimitExceeded";
      case ErrorKind::precondition_failed:
        return "PreconditionFailed";
      case ErrorKind::internal_assert_failure:
        return "InternalAssertFailure";
      case ErrorKind::parse_error:
        return "ParseError";
    }
    return "Error";
  }

}  // namespace sgt
