// Brute-force reference computations used by the tests. Everything here is
// written directly from the definitions and avoids the library algorithms
// it is compared against.

#ifndef SGT_TESTS_ORACLES_HPP_
#define SGT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sgt/semigroup.hpp"

namespace oracle {

  using sgt::Elem;
  using sgt::FiniteSemigroup;
  using Labels = std::vector<Elem>;
  using Pairs  = std::vector<std::pair<Elem, Elem>>;

  // Renumber classes by first occurrence.
  inline Labels normalise(Labels const& labels) {
    Labels            out(labels.size());
    std::vector<Elem> seen;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      auto it = std::find(seen.begin(), seen.end(), labels[k]);
      if (it == seen.end()) {
        seen.push_back(labels[k]);
        it = seen.end() - 1;
      }
      out[k] = Elem(it - seen.begin());
    }
    return out;
  }

  // Every set partition of {0, ..., n-1} as a restricted growth string.
  inline std::vector<Labels> all_partitions(std::size_t n) {
    std::vector<Labels> out;
    Labels              current(n, 0);
    auto rec = [&](auto&& self, std::size_t k, Elem used) -> void {
      if (k == n) {
        out.push_back(current);
        return;
      }
      for (Elem c = 0; c <= used; ++c) {
        current[k] = c;
        self(self, k + 1, std::max<Elem>(used, c + 1));
      }
    };
    if (n == 0) {
      return {Labels{}};
    }
    current[0] = 0;
    rec(rec, 1, 1);
    return out;
  }

  inline bool right_compatible(FiniteSemigroup const& s, Labels const& p) {
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        if (p[a] != p[b]) {
          continue;
        }
        for (Elem t = 0; t < s.size(); ++t) {
          if (p[s.mul(a, t)] != p[s.mul(b, t)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool left_compatible(FiniteSemigroup const& s, Labels const& p) {
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        if (p[a] != p[b]) {
          continue;
        }
        for (Elem t = 0; t < s.size(); ++t) {
          if (p[s.mul(t, a)] != p[s.mul(t, b)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline std::vector<Labels> right_congruences(FiniteSemigroup const& s) {
    std::vector<Labels> out;
    for (auto const& p : all_partitions(s.size())) {
      if (right_compatible(s, p)) {
        out.push_back(p);
      }
    }
    return out;
  }

  // Meet of every right compatible partition that relates all pairs.
  inline Labels generated(FiniteSemigroup const&     s,
                          std::vector<Labels> const& congruences,
                          Pairs const&               x) {
    std::size_t const                n = s.size();
    std::vector<std::vector<bool>>   rel(n, std::vector<bool>(n, true));
    for (auto const& p : congruences) {
      bool contains = std::all_of(x.begin(), x.end(), [&](auto const& pr) {
        return p[pr.first] == p[pr.second];
      });
      if (!contains) {
        continue;
      }
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          rel[a][b] = rel[a][b] && p[a] == p[b];
        }
      }
    }
    Labels out(n);
    for (Elem a = 0; a < n; ++a) {
      out[a] = a;
      for (Elem b = 0; b < a; ++b) {
        if (rel[a][b]) {
          out[a] = out[b];
          break;
        }
      }
    }
    return normalise(out);
  }

  // Products in S^1, with n standing for the identity.
  inline Elem mul1(FiniteSemigroup const& s, Elem a, Elem b) {
    std::size_t const n = s.size();
    return a == n ? b : (b == n ? a : s.mul(a, b));
  }

  inline bool in_right_ideal(FiniteSemigroup const& s, Elem a, Elem b) {
    // a in b S^1
    for (Elem t = 0; t <= s.size(); ++t) {
      if (mul1(s, b, t) == a) {
        return true;
      }
    }
    return false;
  }

  inline bool in_left_ideal(FiniteSemigroup const& s, Elem a, Elem b) {
    for (Elem t = 0; t <= s.size(); ++t) {
      if (mul1(s, t, b) == a) {
        return true;
      }
    }
    return false;
  }

  inline bool in_ideal(FiniteSemigroup const& s, Elem a, Elem b) {
    for (Elem u = 0; u <= s.size(); ++u) {
      for (Elem v = 0; v <= s.size(); ++v) {
        if (mul1(s, mul1(s, u, b), v) == a) {
          return true;
        }
      }
    }
    return false;
  }

  inline bool r_related(FiniteSemigroup const& s, Elem a, Elem b) {
    return in_right_ideal(s, a, b) && in_right_ideal(s, b, a);
  }
  inline bool l_related(FiniteSemigroup const& s, Elem a, Elem b) {
    return in_left_ideal(s, a, b) && in_left_ideal(s, b, a);
  }
  inline bool j_related(FiniteSemigroup const& s, Elem a, Elem b) {
    return in_ideal(s, a, b) && in_ideal(s, b, a);
  }

  // Shortest X-sequence length from a to b by breadth first search over
  // elements, where u -> v when u = x t and v = y t for (x, y) in X or its
  // flip and t in S^1.
  inline std::optional<std::size_t> sequence_length(FiniteSemigroup const& s,
                                                    Pairs const&           x,
                                                    Elem                   a,
                                                    Elem                   b) {
    std::size_t const        n = s.size();
    std::vector<std::size_t> dist(n, std::size_t(-1));
    std::deque<Elem>         queue{a};
    dist[a] = 0;
    while (!queue.empty()) {
      Elem u = queue.front();
      queue.pop_front();
      for (auto [p, q] : x) {
        for (auto [from, to] : {std::pair{p, q}, std::pair{q, p}}) {
          for (Elem t = 0; t <= n; ++t) {
            if (mul1(s, from, t) == u) {
              Elem v = mul1(s, to, t);
              if (dist[v] == std::size_t(-1)) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
              }
            }
          }
        }
      }
    }
    if (dist[b] == std::size_t(-1)) {
      return std::nullopt;
    }
    return dist[b];
  }

  inline bool is_group(FiniteSemigroup const& g) {
    std::size_t const n = g.size();
    for (Elem a = 0; a < n; ++a) {
      std::set<Elem> row, col;
      for (Elem b = 0; b < n; ++b) {
        row.insert(g.mul(a, b));
        col.insert(g.mul(b, a));
      }
      if (row.size() != n || col.size() != n) {
        return false;
      }
    }
    return n > 0;
  }

  inline bool is_semilattice(FiniteSemigroup const& s) {
    for (Elem a = 0; a < s.size(); ++a) {
      if (s.mul(a, a) != a) {
        return false;
      }
      for (Elem b = 0; b < s.size(); ++b) {
        if (s.mul(a, b) != s.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  // Bijective and multiplicative.
  inline bool is_isomorphism(FiniteSemigroup const&   s,
                             FiniteSemigroup const&   t,
                             std::vector<Elem> const& f) {
    if (s.size() != t.size() || f.size() != s.size()) {
      return false;
    }
    std::set<Elem> image(f.begin(), f.end());
    if (image.size() != s.size() || *image.rbegin() >= t.size()) {
      return false;
    }
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        if (f[s.mul(a, b)] != t.mul(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

  // Completely simple: every element is in a subgroup and S has one J-class.
  inline bool completely_simple(FiniteSemigroup const& s) {
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        if (!in_ideal(s, a, b)) {
          return false;
        }
      }
      if (!(r_related(s, a, s.mul(a, a)) && l_related(s, a, s.mul(a, a)))) {
        return false;
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // SGT_TESTS_ORACLES_HPP_
