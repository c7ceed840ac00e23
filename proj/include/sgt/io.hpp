// Plain text formats for semigroups.
//
//   cayley n                 n rows of n entries
//   transformation m k       k rows of m images (generators of degree m)
//   rees g i j [z]           g rows of the group table, then j rows of i
//                            entries of P, "-" for the zero; z is 1 (or
//                            "zero") for M0[G; I, J; P], 0 by default
//
// Lines starting with '#' and blank lines are ignored.

#ifndef SGT_IO_HPP_
#define SGT_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgt/semigroup.hpp"
#include "sgt/structure.hpp"

namespace sgt {

  enum class InputFormat { automatic, cayley, transformation, rees };

  // "auto", "cayley", "transformation" or "rees"; ParseError(0, ...) otherwise.
  InputFormat parse_format(std::string_view name);

  struct ParsedInput {
    FiniteSemigroup                            semigroup;
    std::optional<ReesStructure>               rees;
    std::optional<std::vector<Transformation>> generators;
  };

  // With an explicit format the leading keyword may be omitted.
  ParsedInput parse_input(std::istream& in, InputFormat format = InputFormat::automatic);

  // "-" reads standard input.
  ParsedInput parse_file(std::string const& path,
                         InputFormat        format = InputFormat::automatic);

  void write_cayley(std::ostream& out, FiniteSemigroup const& s);
  void write_rees(std::ostream& out, ReesStructure const& r);

}  // namespace sgt

#endif  // SGT_IO_HPP_
