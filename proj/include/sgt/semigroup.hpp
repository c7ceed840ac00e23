// Finite semigroups given by a complete Cayley table, their standard
// constructions, and definition-level classification.

#ifndef SGT_SEMIGROUP_HPP_
#define SGT_SEMIGROUP_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgt/types.hpp"

namespace sgt {

  class FiniteSemigroup {
   public:
    // The empty table; only useful as a placeholder.
    FiniteSemigroup() = default;

    // Validates ranges (RangeError) and associativity (AssociativityViolation,
    // reporting the first failing triple). Identity and zero are detected.
    static FiniteSemigroup from_cayley(std::size_t                    n,
                                       std::vector<std::vector<Elem>> rows,
                                       std::vector<std::string> labels = {});

    // Same, with a row-major table of n*n entries.
    static FiniteSemigroup from_table(std::size_t              n,
                                      std::vector<Elem>        table,
                                      std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return _n;
    }

    Elem mul(Elem a, Elem b) const noexcept {
      return _table[std::size_t(a) * _n + b];
    }

    // Product in S^1, where either factor may be kOne.
    Elem mul1(Elem a, Elem b) const noexcept {
      return a == kOne ? b : (b == kOne ? a : mul(a, b));
    }

    std::span<Elem const> row(Elem a) const noexcept {
      return {_table.data() + std::size_t(a) * _n, _n};
    }

    std::span<Elem const> table() const noexcept {
      return _table;
    }

    std::optional<Elem> identity() const noexcept {
      return _identity;
    }

    std::optional<Elem> zero() const noexcept {
      return _zero;
    }

    bool is_idempotent(Elem a) const noexcept {
      return mul(a, a) == a;
    }

    // Display label; falls back to the index.
    std::string label(Elem a) const;

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    // Tables are compared entry by entry; labels are ignored.
    bool operator==(FiniteSemigroup const& other) const noexcept {
      return _n == other._n && _table == other._table;
    }

   private:
    std::size_t              _n = 0;
    std::vector<Elem>        _table;
    std::vector<std::string> _labels;
    std::optional<Elem>      _identity;
    std::optional<Elem>      _zero;
  };

  // Full transformation of {0, ..., m-1}, stored as its image list.
  struct Transformation {
    std::vector<Elem> images;

    std::size_t degree() const noexcept {
      return images.size();
    }

    // Left-to-right composition: x(fg) = (xf)g.
    Transformation then(Transformation const& g) const;

    bool operator==(Transformation const&) const = default;
  };

  // Closure of the generators under composition. Elements are numbered in
  // discovery order: generators first, then breadth first over products with
  // generators. Labels are shortest generator words (a, b, c, ...).
  FiniteSemigroup from_transformations(std::size_t                        degree,
                                       std::vector<Transformation> const& gens);

  // Transformations of the elements in the same order as from_transformations.
  std::vector<Transformation>
  enumerate_transformations(std::size_t                        degree,
                            std::vector<Transformation> const& gens);

  // S^1 with the new identity at index n. With only_if_missing, a monoid is
  // returned unchanged.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s,
                                  bool only_if_missing = false);

  // S^0 with the new zero at index n.
  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s,
                              bool                   only_if_missing = false);

  // (i, j) is stored at i*|N| + j.
  FiniteSemigroup direct_product(FiniteSemigroup const& m,
                                 FiniteSemigroup const& n);

  // Elements of S\I keep their relative order, the fresh zero is last.
  FiniteSemigroup rees_quotient(FiniteSemigroup const& s,
                                std::vector<Elem> const& ideal);

  // Opposite semigroup: a * b = b a. Left notions become right ones.
  FiniteSemigroup transpose(FiniteSemigroup const& s);

  // Copy of S with element x renamed perm[x].
  FiniteSemigroup relabel(FiniteSemigroup const& s,
                          std::vector<Elem> const& perm);

  struct SubsetClosure {
    std::vector<Elem> members;  // sorted
    bool              closed = false;
  };

  SubsetClosure subsemigroup_closure(FiniteSemigroup const&   s,
                                     std::vector<Elem> const& seed);

  bool is_closed(FiniteSemigroup const& s, std::vector<Elem> const& members);

  // Sub-table on a multiplicatively closed subset; element k of the result is
  // members[k] (members sorted). Throws NotClosed otherwise.
  FiniteSemigroup restrict_to(FiniteSemigroup const&   s,
                              std::vector<Elem> const& members);

  // Whether S*I and I*S are contained in I; the first violating pair
  // (product factors) is written to witness when given.
  bool is_two_sided_ideal(FiniteSemigroup const&               s,
                          std::vector<Elem> const&             ideal,
                          std::pair<Elem, Elem>* witness = nullptr);

  // Greedy generating set: repeatedly add the smallest element not yet
  // generated.
  std::vector<Elem> small_generating_set(FiniteSemigroup const& s);

  struct Properties {
    bool commutative          = false;
    bool band                 = false;
    bool semilattice          = false;
    bool group                = false;
    bool monoid               = false;
    bool has_zero             = false;
    bool left_zero            = false;
    bool right_zero           = false;
    bool nilpotent            = false;
    bool completely_regular   = false;
    bool cryptogroup          = false;
    bool left_simple          = false;
    bool right_simple         = false;
    bool simple               = false;
    bool zero_simple          = false;
    bool completely_simple    = false;
    bool completely_zero_simple = false;

    // Smallest k with S^k = {0} when nilpotent.
    std::optional<std::size_t> nilpotency_class;
    std::size_t                idempotents = 0;

    bool operator==(Properties const&) const = default;
  };

  Properties classify(FiniteSemigroup const& s);

}  // namespace sgt

#endif  // SGT_SEMIGROUP_HPP_
