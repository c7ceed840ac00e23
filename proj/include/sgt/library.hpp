// Small named semigroups used by the sweep, the tests and the CLI.

#ifndef SGT_LIBRARY_HPP_
#define SGT_LIBRARY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgt/semigroup.hpp"

namespace sgt {

  // Z_n with element k standing for g^k; 0 is the identity.
  FiniteSemigroup cyclic_group(std::size_t n);

  // {0 < 1 < ... < n-1} under min; 0 is the zero and n-1 the identity.
  FiniteSemigroup chain(std::size_t n);

  // x y = x.
  FiniteSemigroup left_zero(std::size_t n);

  // x y = y.
  FiniteSemigroup right_zero(std::size_t n);

  // I x J with (i, j)(k, l) = (i, l); (i, j) is stored at i*cols + j.
  FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols);

  // {a, a^2, ..., a^(n-1), 0} with a^n = 0; element k is a^(k+1), the zero
  // is last.
  FiniteSemigroup nilpotent_cyclic(std::size_t n);

  // All transformations of {0, ..., m-1}, from a permutation, a cycle and a
  // rank m-1 map.
  FiniteSemigroup full_transformation_monoid(std::size_t m);

  struct LibraryEntry {
    std::string     name;
    FiniteSemigroup semigroup;
  };

  // Fixed order, built once.
  std::vector<LibraryEntry> const& library();

  std::optional<FiniteSemigroup> library_semigroup(std::string_view name);

  // Monoids of order at most 3 used for direct products, one per isomorphism
  // type listed (trivial, Z2, Z3, chain2, chain3, LZ2^1, RZ2^1, N2^1).
  std::vector<LibraryEntry> const& small_monoids();

}  // namespace sgt

#endif  // SGT_LIBRARY_HPP_
