// Structure theory for finite semigroups: Rees matrix semigroups and their
// coordinatization, the theta right congruence on completely 0-simple
// semigroups, semilattice decompositions and the diagonal act.

#ifndef SGT_STRUCTURE_HPP_
#define SGT_STRUCTURE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sgt/congruence.hpp"
#include "sgt/semigroup.hpp"

namespace sgt {

  // M[G; I, J; P] or M0[G; I, J; P]. Entry p(j, i) is a group element, or
  // nullopt for the zero (only allowed when with_zero).
  struct ReesStructure {
    FiniteSemigroup                  group;
    std::size_t                      i_size = 0;
    std::size_t                      j_size = 0;
    std::vector<std::optional<Elem>> p_matrix;  // row-major, j_size x i_size
    bool                             with_zero = false;

    std::optional<Elem> p(std::size_t j, std::size_t i) const {
      return p_matrix[j * i_size + i];
    }

    // Every row and every column has a non-zero entry.
    bool is_regular() const;

    // Index of (i, g, j) in the constructed semigroup.
    Elem element(std::size_t i, Elem g, std::size_t j) const {
      return Elem((i * group.size() + g) * j_size + j);
    }
  };

  struct ReesConstruction {
    FiniteSemigroup semigroup;
    // Set when P is not regular: the completely (0-)simple check was skipped.
    bool irregular_warning = false;
  };

  // Triples (i, g, j) in lexicographic order, then the zero when with_zero.
  ReesConstruction rees_construct(ReesStructure const& r);

  struct ThetaResult {
    // patterns[j][i] is set iff p(j, i) is non-zero.
    std::vector<std::vector<bool>> patterns;
    RightCongruence                congruence;
    std::size_t                    distinct_patterns = 0;
  };

  // {0} plus one class per distinct row pattern of P. The semigroup must be
  // rees_construct(r) for r with a zero.
  ThetaResult theta_congruence(FiniteSemigroup const& s, ReesStructure const& r);

  struct ReesCoordinates {
    ReesStructure structure;
    // iso[k] is the element of S matching element k of
    // rees_construct(structure); verified to be an isomorphism.
    std::vector<Elem> iso;
  };

  // Rees coordinates of a completely simple or completely 0-simple semigroup.
  // P is normalised: entries in the first row and column are the group
  // identity wherever non-zero.
  ReesCoordinates rees_coordinates(FiniteSemigroup const& s);

  enum class ComponentKind { completely_simple, archimedean };

  std::string_view to_string(ComponentKind kind) noexcept;

  // Semilattice Y of semigroups S_alpha.
  struct Decomposition {
    std::vector<Elem>              component_of;  // canonical class map
    std::vector<std::vector<Elem>> components;
    FiniteSemigroup                semilattice;  // S / component relation
    std::vector<ComponentKind>     kinds;
    std::vector<FiniteSemigroup>   component_tables;
  };

  // Components are the J-classes.
  Decomposition cr_decomposition(FiniteSemigroup const& s);

  // Components are the classes of mutual divisibility, a | b iff some power
  // a^n (n <= |S|) lies in b S^1.
  Decomposition archimedean_decomposition(FiniteSemigroup const& s);

  struct CompletenessReport {
    bool                           complete = false;
    std::vector<std::vector<Elem>> idempotents;  // per archimedean component
  };

  CompletenessReport completeness_check(FiniteSemigroup const& s);

  struct HCongruenceResult {
    bool                                  is_congruence = false;
    std::optional<CompatibilityViolation> violation;
  };

  HCongruenceResult h_congruence_check(FiniteSemigroup const& s);

  // First (a, b) with {(as, bs) : s in S} = S x S, if any.
  std::optional<Pair> diagonal_cyclic_witness(FiniteSemigroup const& s);

}  // namespace sgt

#endif  // SGT_STRUCTURE_HPP_
