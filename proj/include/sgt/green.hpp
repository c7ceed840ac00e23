// Green's relations, Schutzenberger groups and maximal subgroups.

#ifndef SGT_GREEN_HPP_
#define SGT_GREEN_HPP_

#include <vector>

#include "sgt/congruence.hpp"
#include "sgt/semigroup.hpp"

namespace sgt {

  struct GreenData {
    // Class maps in canonical form (numbered by smallest member).
    RightCongruence r;
    RightCongruence l;
    RightCongruence h;
    RightCongruence d;
    RightCongruence j;

    // group_h[k] is set when H-class k contains an idempotent.
    std::vector<bool> group_h;

    std::vector<Elem> h_class_members(Elem x) const;
  };

  // R and L from equality of the principal one-sided ideals in S^1, J from
  // the two-sided ones, H = R & L, D = R v L. Throws InternalAssertFailure
  // if D != J or a group H-class test disagrees with closure.
  GreenData green_data(FiniteSemigroup const& s);

  // Gamma(H) = Stab(H)/sigma(H) for the H-class of an element.
  struct SchutzGroup {
    std::vector<Elem> h_class;
    // Elements s of S^1 with Hs = H, increasing, kOne last when present.
    std::vector<Elem> stabilizer;
    // sigma-class of stabilizer[k]; classes ordered by smallest member.
    std::vector<Elem> sigma_class_of;
    // Smallest stabilizer member of each sigma-class.
    std::vector<Elem> class_representatives;
    FiniteSemigroup   group;
    // action[i * |Gamma| + c] = h_class[i] * (any member of class c).
    std::vector<Elem> action;

    // sigma-class of a stabilizer element (kOne allowed); throws when s is
    // not in the stabilizer.
    Elem class_of_multiplier(Elem s) const;
  };

  SchutzGroup schutzenberger(FiniteSemigroup const& s, Elem element);

  struct MaximalSubgroup {
    std::vector<Elem> h_class;  // sorted; element k of group is h_class[k]
    FiniteSemigroup   group;
  };

  // One entry per group H-class, in H-class order.
  std::vector<MaximalSubgroup> maximal_subgroups(FiniteSemigroup const& s);

}  // namespace sgt

#endif  // SGT_GREEN_HPP_
