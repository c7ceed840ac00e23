// Basic vocabulary shared by every sgt module: element indices, the formal
// identity sentinel used for S^1 multipliers, and the exception type.

#ifndef SGT_TYPES_HPP_
#define SGT_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgt {

  // Elements of a finite semigroup are positions 0..n-1 in its Cayley table.
  using Elem = std::uint32_t;

  // Stands for the adjoined identity of S^1 when used as a right multiplier.
  // Sorts after every genuine element.
  inline constexpr Elem kOne = std::numeric_limits<Elem>::max();

  // Upper bound on semigroup sizes produced by enumeration.
  inline constexpr std::size_t kMaxEnumeratedSize = 1u << 14;

  enum class ErrorKind {
    associativity_violation,
    range_error,
    degree_mismatch,
    not_an_ideal,
    not_two_sided,
    cap_exceeded,
    invalid_group,
    ragged_matrix,
    mismatched_input,
    not_completely_simple,
    not_completely_regular,
    not_commutative,
    not_generating,
    not_monoids,
    not_homomorphism,
    not_surjective,
    no_internal_identity,
    not_refinement,
    not_closed,
    size_limit_exceeded,
    precondition_failed,
    internal_assert_failure,
    parse_error,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  // Raised by enumerate_right_congruences when the cap is hit.
  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::size_t partial_count)
        : Error(ErrorKind::cap_exceeded,
                "more than " + std::to_string(partial_count)
                    + " right congruences"),
          _count(partial_count) {}

    std::size_t partial_count() const noexcept {
      return _count;
    }

   private:
    std::size_t _count;
  };

  // Raised by the text parser; line is 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& msg)
        : Error(ErrorKind::parse_error,
                "line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace sgt

#endif  // SGT_TYPES_HPP_
