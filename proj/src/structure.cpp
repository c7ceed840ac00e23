#include "sgt/structure.hpp"

#include <algorithm>
#include <map>

#include "sgt/element_set.hpp"
#include "sgt/green.hpp"

namespace sgt {

  namespace {

    [[noreturn]] void internal_failure(std::string const& what) {
      throw Error(ErrorKind::internal_assert_failure, what);
    }

    Decomposition assemble(FiniteSemigroup const& s,
                           RightCongruence const& components,
                           ComponentKind          kind) {
      Decomposition out;
      out.component_of = components.class_of();
      out.components   = components.classes();
      try {
        out.semilattice = quotient_semigroup(s, components);
      } catch (Error const& e) {
        internal_failure(std::string("component relation is not a congruence: ")
                         + e.what());
      }
      if (!classify(out.semilattice).semilattice) {
        internal_failure("quotient by the components is not a semilattice");
      }
      for (auto const& members : out.components) {
        if (!is_closed(s, members)) {
          internal_failure("a component is not a subsemigroup");
        }
        out.component_tables.push_back(restrict_to(s, members));
        out.kinds.push_back(kind);
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  bool ReesStructure::is_regular() const {
    for (std::size_t j = 0; j < j_size; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < i_size; ++i) {
        any = any || p(j, i).has_value();
      }
      if (!any) {
        return false;
      }
    }
    for (std::size_t i = 0; i < i_size; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < j_size; ++j) {
        any = any || p(j, i).has_value();
      }
      if (!any) {
        return false;
      }
    }
    return true;
  }

  ReesConstruction rees_construct(ReesStructure const& r) {
    if (!classify(r.group).group) {
      throw Error(ErrorKind::invalid_group, "the table is not a group");
    }
    if (r.i_size == 0 || r.j_size == 0
        || r.p_matrix.size() != r.i_size * r.j_size) {
      throw Error(ErrorKind::ragged_matrix,
                  "P must have " + std::to_string(r.j_size) + " rows of "
                      + std::to_string(r.i_size) + " entries");
    }
    for (auto const& entry : r.p_matrix) {
      if (!entry && !r.with_zero) {
        throw Error(ErrorKind::precondition_failed,
                    "P has a zero entry but the structure has no zero");
      }
      if (entry && *entry >= r.group.size()) {
        throw Error(ErrorKind::range_error, "P entry is not a group element");
      }
    }

    std::size_t const g_size   = r.group.size();
    std::size_t const triples  = r.i_size * g_size * r.j_size;
    std::size_t const n        = triples + (r.with_zero ? 1 : 0);
    Elem const        zero     = Elem(triples);
    std::vector<Elem> table(n * n, zero);
    std::vector<std::string> labels(n, "0");
    for (std::size_t i1 = 0; i1 < r.i_size; ++i1) {
      for (Elem g1 = 0; g1 < g_size; ++g1) {
        for (std::size_t j1 = 0; j1 < r.j_size; ++j1) {
          Elem const x = r.element(i1, g1, j1);
          labels[x]    = "(" + std::to_string(i1) + "," + r.group.label(g1)
                      + "," + std::to_string(j1) + ")";
          for (std::size_t i2 = 0; i2 < r.i_size; ++i2) {
            auto const link = r.p(j1, i2);
            for (Elem g2 = 0; g2 < g_size; ++g2) {
              for (std::size_t j2 = 0; j2 < r.j_size; ++j2) {
                Elem const y = r.element(i2, g2, j2);
                if (link) {
                  Elem g = r.group.mul(r.group.mul(g1, *link), g2);
                  table[std::size_t(x) * n + y] = r.element(i1, g, j2);
                }
              }
            }
          }
        }
      }
    }

    ReesConstruction out{
        FiniteSemigroup::from_table(n, std::move(table), std::move(labels)),
        false};
    if (r.is_regular()) {
      auto const props = classify(out.semigroup);
      if (r.with_zero ? !props.completely_zero_simple
                      : !props.completely_simple) {
        internal_failure("Rees matrix semigroup with regular P is not "
                         "completely (0-)simple");
      }
    } else {
      out.irregular_warning = true;
    }
    return out;
  }

  ThetaResult theta_congruence(FiniteSemigroup const& s, ReesStructure const& r) {
    if (!r.with_zero) {
      throw Error(ErrorKind::mismatched_input,
                  "theta is defined for Rees matrix semigroups with zero");
    }
    if (!(rees_construct(r).semigroup == s)) {
      throw Error(ErrorKind::mismatched_input,
                  "semigroup is not the construction of the structure");
    }
    ThetaResult                               out;
    std::map<std::vector<bool>, Elem>         pattern_id;
    std::vector<Elem>                         row_class(r.j_size);
    for (std::size_t j = 0; j < r.j_size; ++j) {
      std::vector<bool> pattern(r.i_size);
      for (std::size_t i = 0; i < r.i_size; ++i) {
        pattern[i] = r.p(j, i).has_value();
      }
      row_class[j]
          = pattern_id.emplace(pattern, Elem(pattern_id.size())).first->second;
      out.patterns.push_back(std::move(pattern));
    }
    out.distinct_patterns = pattern_id.size();

    std::vector<Elem> labels(s.size(), Elem(out.distinct_patterns));
    for (std::size_t i = 0; i < r.i_size; ++i) {
      for (Elem g = 0; g < r.group.size(); ++g) {
        for (std::size_t j = 0; j < r.j_size; ++j) {
          labels[r.element(i, g, j)] = row_class[j];
        }
      }
    }
    out.congruence = RightCongruence::from_labels(labels);
    if (!is_right_congruence(s, out.congruence)) {
      internal_failure("theta relation is not right compatible");
    }
    if (out.congruence.index() != out.distinct_patterns + 1) {
      internal_failure("theta index differs from pattern count + 1");
    }
    return out;
  }

  ReesCoordinates rees_coordinates(FiniteSemigroup const& s) {
    auto const          props = classify(s);
    std::optional<Elem> zero;
    if (props.completely_zero_simple) {
      zero = s.zero();
    } else if (!props.completely_simple) {
      throw Error(ErrorKind::not_completely_simple,
                  "semigroup is neither completely simple nor completely "
                  "0-simple");
    }
    auto const g = green_data(s);
    auto in_d    = [&](Elem a) { return !zero || a != *zero; };

    Elem e = kOne;
    for (Elem a = 0; a < s.size() && e == kOne; ++a) {
      if (in_d(a) && s.is_idempotent(a)) {
        e = a;
      }
    }

    // R-classes (rows) and L-classes (columns) of the non-zero D-class, with
    // the classes of e first.
    auto order_classes = [&](RightCongruence const& rel) {
      std::vector<Elem> order{rel.class_of(e)};
      for (Elem a = 0; a < s.size(); ++a) {
        if (in_d(a)
            && std::find(order.begin(), order.end(), rel.class_of(a))
                   == order.end()) {
          order.push_back(rel.class_of(a));
        }
      }
      std::vector<Elem> position(rel.index(), kOne);
      for (std::size_t k = 0; k < order.size(); ++k) {
        position[order[k]] = Elem(k);
      }
      return std::pair{order.size(), position};
    };
    auto const [i_size, row_of_class] = order_classes(g.r);
    auto const [j_size, col_of_class] = order_classes(g.l);
    auto row = [&](Elem a) { return row_of_class[g.r.class_of(a)]; };
    auto col = [&](Elem a) { return col_of_class[g.l.class_of(a)]; };

    auto const        h_e = g.h_class_members(e);
    std::vector<Elem> group_pos(s.size(), kOne);
    for (std::size_t k = 0; k < h_e.size(); ++k) {
      group_pos[h_e[k]] = Elem(k);
    }
    auto in_h_e = [&](Elem a) { return group_pos[a] != kOne; };

    // r_i in H(i, 0) and q_j in H(0, j), chosen so that e r_i = e and
    // q_j e = e whenever those products stay in H_e.
    std::vector<Elem> r(i_size, kOne), q(j_size, kOne);
    for (Elem a = 0; a < s.size(); ++a) {
      if (!in_d(a)) {
        continue;
      }
      if (col(a) == 0) {
        Elem& slot = r[row(a)];
        Elem  ea   = s.mul(e, a);
        if (slot == kOne && (!in_h_e(ea) || ea == e)) {
          slot = a;
        }
      }
      if (row(a) == 0) {
        Elem& slot = q[col(a)];
        Elem  ae   = s.mul(a, e);
        if (slot == kOne && (!in_h_e(ae) || ae == e)) {
          slot = a;
        }
      }
    }
    if (std::find(r.begin(), r.end(), kOne) != r.end()
        || std::find(q.begin(), q.end(), kOne) != q.end()) {
      internal_failure("no normalised representative in some H-class");
    }

    ReesCoordinates out{ReesStructure{restrict_to(s, h_e),
                                      i_size,
                                      j_size,
                                      std::vector<std::optional<Elem>>(i_size
                                                                       * j_size),
                                      zero.has_value()},
                        {}};
    for (std::size_t j = 0; j < j_size; ++j) {
      for (std::size_t i = 0; i < i_size; ++i) {
        Elem link = s.mul(q[j], r[i]);
        if (in_h_e(link)) {
          out.structure.p_matrix[j * i_size + i] = group_pos[link];
        } else if (!zero) {
          internal_failure("sandwich entry outside H_e without a zero");
        }
      }
    }

    auto const built = rees_construct(out.structure).semigroup;
    if (built.size() != s.size()) {
      internal_failure("coordinatized semigroup has the wrong size");
    }
    out.iso.assign(built.size(), kOne);
    for (std::size_t i = 0; i < i_size; ++i) {
      for (std::size_t k = 0; k < h_e.size(); ++k) {
        for (std::size_t j = 0; j < j_size; ++j) {
          out.iso[out.structure.element(i, Elem(k), j)]
              = s.mul(s.mul(r[i], h_e[k]), q[j]);
        }
      }
    }
    if (zero) {
      out.iso.back() = *zero;
    }

    std::vector<bool> hit(s.size(), false);
    for (auto x : out.iso) {
      if (hit[x]) {
        internal_failure("Rees coordinates are not injective");
      }
      hit[x] = true;
    }
    for (Elem a = 0; a < built.size(); ++a) {
      for (Elem b = 0; b < built.size(); ++b) {
        if (out.iso[built.mul(a, b)] != s.mul(out.iso[a], out.iso[b])) {
          internal_failure("Rees coordinates are not a homomorphism");
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decompositions
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(ComponentKind kind) noexcept {
    return kind == ComponentKind::completely_simple ? "completely_simple"
                                                    : "archimedean";
  }

  Decomposition cr_decomposition(FiniteSemigroup const& s) {
    if (!classify(s).completely_regular) {
      throw Error(ErrorKind::not_completely_regular,
                  "semigroup is not a union of groups");
    }
    auto out = assemble(s, green_data(s).j, ComponentKind::completely_simple);
    for (auto const& component : out.component_tables) {
      if (!classify(component).completely_simple) {
        internal_failure("a J-class is not completely simple");
      }
    }
    return out;
  }

  Decomposition archimedean_decomposition(FiniteSemigroup const& s) {
    if (!classify(s).commutative) {
      throw Error(ErrorKind::not_commutative, "semigroup is not commutative");
    }
    std::size_t const n = s.size();

    // powers[a] = {a, a^2, ..., a^n}, which is every power of a
    std::vector<std::vector<Elem>> powers(n);
    for (Elem a = 0; a < n; ++a) {
      Elem p = a;
      for (std::size_t k = 0; k < n; ++k) {
        powers[a].push_back(p);
        p = s.mul(p, a);
      }
    }
    std::vector<ElementSet> ideal(n, ElementSet(n));
    for (Elem b = 0; b < n; ++b) {
      ideal[b].insert(b);
      for (Elem t = 0; t < n; ++t) {
        ideal[b].insert(s.mul(b, t));
      }
    }
    auto divides = [&](Elem a, Elem b) {
      return std::any_of(powers[a].begin(), powers[a].end(), [&](Elem p) {
        return ideal[b].contains(p);
      });
    };

    std::vector<Elem> labels(n);
    for (Elem a = 0; a < n; ++a) {
      labels[a] = a;
      for (Elem b = 0; b < a; ++b) {
        if (divides(a, b) && divides(b, a)) {
          labels[a] = labels[b];
          break;
        }
      }
    }
    auto const components = RightCongruence::from_labels(labels);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (components.related(a, b) != (divides(a, b) && divides(b, a))) {
          internal_failure("mutual divisibility is not an equivalence");
        }
      }
    }

    auto out = assemble(s, components, ComponentKind::archimedean);
    // Archimedean inside each component: a^k in b C^1.
    for (auto const& members : out.components) {
      ElementSet in(n);
      for (auto x : members) {
        in.insert(x);
      }
      for (auto a : members) {
        for (auto b : members) {
          ElementSet local(n);
          local.insert(b);
          for (auto c : members) {
            local.insert(s.mul(b, c));
          }
          bool ok = std::any_of(powers[a].begin(),
                                powers[a].end(),
                                [&](Elem p) { return local.contains(p); });
          if (!ok) {
            internal_failure("a component is not archimedean");
          }
        }
      }
    }
    return out;
  }

  CompletenessReport completeness_check(FiniteSemigroup const& s) {
    auto const         dec = archimedean_decomposition(s);
    CompletenessReport out;
    out.complete = true;
    for (auto const& members : dec.components) {
      std::vector<Elem> idempotents;
      for (auto x : members) {
        if (s.is_idempotent(x)) {
          idempotents.push_back(x);
        }
      }
      out.complete = out.complete && !idempotents.empty();
      out.idempotents.push_back(std::move(idempotents));
    }
    return out;
  }

  HCongruenceResult h_congruence_check(FiniteSemigroup const& s) {
    auto const h   = green_data(s).h;
    auto       bad = find_right_violation(s, h);
    if (!bad) {
      bad = find_left_violation(s, h);
    }
    return {!bad.has_value(), bad};
  }

  std::optional<Pair> diagonal_cyclic_witness(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        ElementSet orbit(n * n);
        for (Elem t = 0; t < n; ++t) {
          orbit.insert(Elem(std::size_t(s.mul(a, t)) * n + s.mul(b, t)));
        }
        if (orbit.count() == n * n) {
          return Pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace sgt
