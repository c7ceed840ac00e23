// Right congruences on finite semigroups: generation from pairs by
// union-find saturation, X-sequence witnesses, enumeration, small generating
// sets and X-sequence diameters.

#ifndef SGT_CONGRUENCE_HPP_
#define SGT_CONGRUENCE_HPP_

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sgt/semigroup.hpp"

namespace sgt {

  using Pair = std::pair<Elem, Elem>;

  // Finite set of ordered pairs, sorted and without duplicates.
  class PairSet {
   public:
    PairSet() = default;
    PairSet(std::initializer_list<Pair> pairs);
    explicit PairSet(std::vector<Pair> pairs);

    void insert(Elem a, Elem b);
    void insert(PairSet const& other);

    // X together with every flipped pair.
    PairSet symmetrized() const;

    // Every pair flipped.
    PairSet flipped() const;

    std::vector<Pair> const& pairs() const noexcept {
      return _pairs;
    }
    std::size_t size() const noexcept {
      return _pairs.size();
    }
    bool empty() const noexcept {
      return _pairs.empty();
    }
    auto begin() const noexcept {
      return _pairs.begin();
    }
    auto end() const noexcept {
      return _pairs.end();
    }

    bool operator==(PairSet const&) const = default;

   private:
    std::vector<Pair> _pairs;
  };

  // An equivalence stored as a class map in canonical form: classes are
  // numbered 0, 1, ... in order of their smallest member.
  class RightCongruence {
   public:
    RightCongruence() = default;

    // Any labelling of elements by class; renumbered canonically.
    static RightCongruence from_labels(std::vector<Elem> const& labels);
    static RightCongruence identity(std::size_t n);
    static RightCongruence universal(std::size_t n);

    std::size_t size() const noexcept {
      return _class_of.size();
    }
    std::size_t index() const noexcept {
      return _index;
    }
    std::vector<Elem> const& class_of() const noexcept {
      return _class_of;
    }
    Elem class_of(Elem a) const noexcept {
      return _class_of[a];
    }
    bool related(Elem a, Elem b) const noexcept {
      return _class_of[a] == _class_of[b];
    }

    // Classes ordered by smallest member, members increasing.
    std::vector<std::vector<Elem>> classes() const;

    // Smallest member of each class, in class order.
    std::vector<Elem> representatives() const;

    // Every class of this lies inside a class of other.
    bool refines(RightCongruence const& other) const;

    bool is_universal() const noexcept {
      return _index == 1;
    }
    bool is_identity() const noexcept {
      return _index == _class_of.size();
    }

    bool operator==(RightCongruence const&) const = default;

   private:
    std::vector<Elem> _class_of;
    std::size_t       _index = 0;
  };

  // Index descending, then class maps lexicographically.
  bool canonical_less(RightCongruence const& a, RightCongruence const& b);

  // (a, b, s) with a rho b but not a*s rho b*s (or s*a, s*b when on_left).
  struct CompatibilityViolation {
    Elem a;
    Elem b;
    Elem s;
    bool on_left;
  };

  std::optional<CompatibilityViolation>
  find_right_violation(FiniteSemigroup const& s, RightCongruence const& rho);
  std::optional<CompatibilityViolation>
  find_left_violation(FiniteSemigroup const& s, RightCongruence const& rho);

  bool is_right_congruence(FiniteSemigroup const& s, RightCongruence const& rho);
  bool is_two_sided_congruence(FiniteSemigroup const& s,
                               RightCongruence const& rho);

  // Smallest right congruence (two-sided when requested) containing X.
  RightCongruence rc_generate(FiniteSemigroup const& s,
                              PairSet const&         x,
                              bool                   two_sided = false);

  // Smallest right congruence containing rho and X; rho must already be a
  // right congruence (two-sided when two_sided is set).
  RightCongruence rc_extend(FiniteSemigroup const& s,
                            RightCongruence const& rho,
                            PairSet const&         x,
                            bool                   two_sided = false);

  // Join in the lattice of right congruences, by re-saturation.
  RightCongruence rc_join(FiniteSemigroup const& s,
                          RightCongruence const& rho,
                          RightCongruence const& sigma);

  // (a, r) for every a that is not the smallest member r of its class.
  PairSet spanning_pairs(RightCongruence const& rho);

  // Every (a, b) with a < b in the same class.
  PairSet within_class_pairs(RightCongruence const& rho);

  struct XStep {
    Elem x;
    Elem y;
    Elem s;  // kOne for the adjoined identity

    auto operator<=>(XStep const&) const = default;
  };

  // a = x_1 s_1, y_1 s_1 = x_2 s_2, ..., y_k s_k = b.
  struct XSequence {
    Elem               a;
    Elem               b;
    std::vector<XStep> steps;

    std::size_t length() const noexcept {
      return steps.size();
    }
  };

  // Shortest X-sequence from a to b, lexicographically least among shortest
  // by (x, y, s) step records; nullopt when (a, b) is not a consequence of X.
  std::optional<XSequence> find_x_sequence(FiniteSemigroup const& s,
                                           PairSet const&         x,
                                           Elem                   a,
                                           Elem                   b);

  // Checks every identity of the sequence by multiplication and that each
  // step uses a pair of X or its flip.
  bool check_x_sequence(FiniteSemigroup const& s,
                        PairSet const&         x,
                        XSequence const&       seq);

  struct CongruenceLattice {
    std::vector<RightCongruence> congruences;  // canonical order
  };

  // All right congruences, as joins of principal ones. Throws CapExceeded
  // when more than cap are found.
  CongruenceLattice
  enumerate_right_congruences(FiniteSemigroup const&     s,
                              std::optional<std::size_t> cap = std::nullopt);

  struct GeneratingPairs {
    PairSet pairs;
    bool    optimal = false;
  };

  inline constexpr std::size_t kDefaultExactLimit = 12;

  // A pair set generating rho. Exhaustive minimum-size search when rho has at
  // most exact_limit within-class pairs, greedy otherwise.
  GeneratingPairs
  minimal_generating_pairs(FiniteSemigroup const& s,
                           RightCongruence const& rho,
                           std::size_t exact_limit = kDefaultExactLimit);

  struct Disconnected {
    std::size_t index;
    bool        operator==(Disconnected const&) const = default;
  };

  using Diameter = std::variant<std::size_t, Disconnected>;

  // Largest shortest X-sequence length over all pairs, when X generates the
  // universal right congruence.
  Diameter rc_diameter(FiniteSemigroup const& s, PairSet const& x);

  // S/rho for a two-sided congruence; element k is class k. Throws
  // NotTwoSided with a violating triple otherwise.
  FiniteSemigroup quotient_semigroup(FiniteSemigroup const& s,
                                     RightCongruence const& rho);

}  // namespace sgt

#endif  // SGT_CONGRUENCE_HPP_
