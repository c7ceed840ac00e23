#include <algorithm>

#include "sgt/element_set.hpp"
#include "sgt/green.hpp"
#include "sgt/semigroup.hpp"

namespace sgt {

  namespace {

    bool rows_and_columns_are_permutations(FiniteSemigroup const& s) {
      std::size_t const n = s.size();
      for (Elem a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (Elem b = 0; b < n; ++b) {
          row[s.mul(a, b)] = true;
          col[s.mul(b, a)] = true;
        }
        if (std::count(row.begin(), row.end(), true) != std::ptrdiff_t(n)
            || std::count(col.begin(), col.end(), true) != std::ptrdiff_t(n)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  Properties classify(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    Properties        p;

    p.commutative = true;
    p.left_zero   = true;
    p.right_zero  = true;
    for (Elem a = 0; a < n; ++a) {
      p.idempotents += s.is_idempotent(a) ? 1 : 0;
      for (Elem b = 0; b < n; ++b) {
        p.commutative = p.commutative && s.mul(a, b) == s.mul(b, a);
        p.left_zero   = p.left_zero && s.mul(a, b) == a;
        p.right_zero  = p.right_zero && s.mul(a, b) == b;
      }
    }
    p.band        = p.idempotents == n;
    p.semilattice = p.band && p.commutative;
    p.monoid      = s.identity().has_value();
    p.has_zero    = s.zero().has_value();
    p.group       = p.idempotents == 1 && rows_and_columns_are_permutations(s);

    if (p.has_zero) {
      // S^1 = S, S^(k+1) = S^k S; the chain stabilises within n steps.
      Elem const zero = *s.zero();
      ElementSet power(n);
      for (Elem a = 0; a < n; ++a) {
        power.insert(a);
      }
      for (std::size_t k = 1; k <= n; ++k) {
        if (power.count() == 1 && power.contains(zero)) {
          p.nilpotent        = true;
          p.nilpotency_class = k;
          break;
        }
        ElementSet next(n);
        for (auto a : power.members()) {
          for (Elem t = 0; t < n; ++t) {
            next.insert(s.mul(a, t));
          }
        }
        power = std::move(next);
      }
    }

    auto const g = green_data(s);
    p.completely_regular = true;
    for (Elem a = 0; a < n && p.completely_regular; ++a) {
      p.completely_regular = g.h.related(a, s.mul(a, a));
    }
    p.cryptogroup = p.completely_regular && is_two_sided_congruence(s, g.h);
    p.left_simple  = g.l.index() == 1;
    p.right_simple = g.r.index() == 1;
    p.simple       = g.j.index() == 1;
    if (p.has_zero && n > 1) {
      Elem const zero        = *s.zero();
      bool       square_zero = true;
      for (Elem a = 0; a < n && square_zero; ++a) {
        for (Elem b = 0; b < n && square_zero; ++b) {
          square_zero = s.mul(a, b) == zero;
        }
      }
      p.zero_simple = !square_zero && g.j.index() == 2;
    }
    p.completely_simple      = p.simple && p.completely_regular;
    p.completely_zero_simple = p.zero_simple;
    return p;
  }

}  // namespace sgt
