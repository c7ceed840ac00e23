#include "sgt/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "sgt/element_set.hpp"

namespace sgt {

  namespace {

    // Class labels by equality of the given sets: each element is labelled
    // with the first element sharing its set.
    RightCongruence partition_by(std::vector<ElementSet> const& sets) {
      std::unordered_map<ElementSet, Elem, ElementSetHash> first;
      std::vector<Elem>                                    labels(sets.size());
      for (Elem a = 0; a < sets.size(); ++a) {
        labels[a] = first.emplace(sets[a], a).first->second;
      }
      return RightCongruence::from_labels(labels);
    }

    Elem find_root(std::vector<Elem>& parent, Elem x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    bool is_group_table(FiniteSemigroup const& g) {
      if (!g.identity()) {
        return false;
      }
      std::size_t const n = g.size();
      for (Elem a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (Elem b = 0; b < n; ++b) {
          row[g.mul(a, b)] = true;
          col[g.mul(b, a)] = true;
        }
        if (std::find(row.begin(), row.end(), false) != row.end()
            || std::find(col.begin(), col.end(), false) != col.end()) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::vector<Elem> GreenData::h_class_members(Elem x) const {
    std::vector<Elem> out;
    for (Elem a = 0; a < h.size(); ++a) {
      if (h.related(a, x)) {
        out.push_back(a);
      }
    }
    return out;
  }

  GreenData green_data(FiniteSemigroup const& s) {
    std::size_t const       n = s.size();
    std::vector<ElementSet> right(n, ElementSet(n)), left(n, ElementSet(n));
    for (Elem a = 0; a < n; ++a) {
      right[a].insert(a);
      left[a].insert(a);
      for (Elem t = 0; t < n; ++t) {
        right[a].insert(s.mul(a, t));
        left[a].insert(s.mul(t, a));
      }
    }
    std::vector<ElementSet> two_sided(n, ElementSet(n));
    for (Elem a = 0; a < n; ++a) {
      for (auto u : left[a].members()) {
        two_sided[a].insert_all(right[u]);
      }
    }

    GreenData g;
    g.r = partition_by(right);
    g.l = partition_by(left);
    g.j = partition_by(two_sided);

    std::map<std::pair<Elem, Elem>, Elem> cell;
    std::vector<Elem>                     h_labels(n);
    for (Elem a = 0; a < n; ++a) {
      h_labels[a] = cell.emplace(std::pair{g.r.class_of(a), g.l.class_of(a)}, a)
                        .first->second;
    }
    g.h = RightCongruence::from_labels(h_labels);

    std::vector<Elem> parent(n);
    std::iota(parent.begin(), parent.end(), Elem(0));
    auto const r_reps = g.r.representatives();
    auto const l_reps = g.l.representatives();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b : {r_reps[g.r.class_of(a)], l_reps[g.l.class_of(a)]}) {
        Elem x = find_root(parent, a), y = find_root(parent, b);
        parent[std::max(x, y)] = std::min(x, y);
      }
    }
    std::vector<Elem> d_labels(n);
    for (Elem a = 0; a < n; ++a) {
      d_labels[a] = find_root(parent, a);
    }
    g.d = RightCongruence::from_labels(d_labels);
    if (g.d != g.j) {
      throw Error(ErrorKind::internal_assert_failure, "D != J");
    }

    g.group_h.assign(g.h.index(), false);
    for (Elem a = 0; a < n; ++a) {
      if (s.is_idempotent(a)) {
        g.group_h[g.h.class_of(a)] = true;
      }
    }
    auto const h_classes = g.h.classes();
    for (std::size_t k = 0; k < h_classes.size(); ++k) {
      if (is_closed(s, h_classes[k]) != g.group_h[k]) {
        throw Error(ErrorKind::internal_assert_failure,
                    "H-class " + std::to_string(k)
                        + " is closed iff it has an idempotent, violated");
      }
    }
    return g;
  }

  Elem SchutzGroup::class_of_multiplier(Elem s) const {
    auto it = std::lower_bound(stabilizer.begin(), stabilizer.end(), s);
    if (it == stabilizer.end() || *it != s) {
      throw Error(ErrorKind::precondition_failed,
                  "multiplier is not in the stabilizer");
    }
    return sigma_class_of[std::size_t(it - stabilizer.begin())];
  }

  SchutzGroup schutzenberger(FiniteSemigroup const& s, Elem element) {
    if (element >= s.size()) {
      throw Error(ErrorKind::range_error, "element out of range");
    }
    auto const g = green_data(s);

    SchutzGroup out;
    out.h_class = g.h_class_members(element);
    ElementSet h_set(s.size());
    for (auto h : out.h_class) {
      h_set.insert(h);
    }

    // stabilizer and sigma-classes, keyed by the action on H
    std::map<std::vector<Elem>, Elem> class_by_action;
    std::vector<std::vector<Elem>>    class_action;
    auto action_of = [&](Elem t) {
      std::vector<Elem> images;
      images.reserve(out.h_class.size());
      for (auto h : out.h_class) {
        images.push_back(s.mul1(h, t));
      }
      return images;
    };
    for (std::size_t k = 0; k <= s.size(); ++k) {
      Elem       t = k == s.size() ? kOne : Elem(k);
      auto       images = action_of(t);
      ElementSet image_set(s.size());
      for (auto x : images) {
        image_set.insert(x);
      }
      if (!(image_set == h_set)) {
        continue;
      }
      out.stabilizer.push_back(t);
      auto [it, fresh] = class_by_action.emplace(images, Elem(class_action.size()));
      if (fresh) {
        class_action.push_back(images);
        out.class_representatives.push_back(t);
      }
      out.sigma_class_of.push_back(it->second);
    }

    std::size_t const m = class_action.size();
    std::vector<Elem> table(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        Elem product
            = s.mul1(out.class_representatives[a], out.class_representatives[b]);
        auto it = class_by_action.find(action_of(product));
        if (it == class_by_action.end()) {
          throw Error(ErrorKind::internal_assert_failure,
                      "stabilizer is not closed");
        }
        table[a * m + b] = it->second;
      }
    }
    std::vector<std::string> labels;
    for (auto t : out.class_representatives) {
      labels.push_back("[" + s.label(t) + "]");
    }
    out.group = FiniteSemigroup::from_table(m, std::move(table), std::move(labels));
    if (m != out.h_class.size() || !is_group_table(out.group)) {
      throw Error(ErrorKind::internal_assert_failure,
                  "Schutzenberger group has the wrong order or is not a group");
    }

    out.action.resize(out.h_class.size() * m);
    for (std::size_t i = 0; i < out.h_class.size(); ++i) {
      for (std::size_t c = 0; c < m; ++c) {
        out.action[i * m + c] = class_action[c][i];
      }
    }
    return out;
  }

  std::vector<MaximalSubgroup> maximal_subgroups(FiniteSemigroup const& s) {
    auto const                   g       = green_data(s);
    auto const                   classes = g.h.classes();
    std::vector<MaximalSubgroup> out;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (g.group_h[k]) {
        out.push_back({classes[k], restrict_to(s, classes[k])});
      }
    }
    return out;
  }

}  // namespace sgt
