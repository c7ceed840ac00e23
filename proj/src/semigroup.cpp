#include "sgt/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "sgt/element_set.hpp"
#include "sgt/simd.hpp"

namespace sgt {

  namespace {

    struct ImagesHash {
      std::size_t operator()(std::vector<Elem> const& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) {
          h = h * 1000003u ^ x;
        }
        return h;
      }
    };

    std::string generator_name(std::size_t k) {
      if (k < 26) {
        return std::string(1, char('a' + k));
      }
      return "g" + std::to_string(k) + ".";
    }

  }  // namespace

  FiniteSemigroup FiniteSemigroup::from_cayley(std::size_t n,
                                               std::vector<std::vector<Elem>> rows,
                                               std::vector<std::string> labels) {
    if (rows.size() != n) {
      throw Error(ErrorKind::range_error,
                  "expected " + std::to_string(n) + " rows, got "
                      + std::to_string(rows.size()));
    }
    std::vector<Elem> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw Error(ErrorKind::range_error,
                    "row " + std::to_string(i) + " has "
                        + std::to_string(rows[i].size()) + " entries");
      }
      table.insert(table.end(), rows[i].begin(), rows[i].end());
    }
    return from_table(n, std::move(table), std::move(labels));
  }

  FiniteSemigroup FiniteSemigroup::from_table(std::size_t              n,
                                              std::vector<Elem>        table,
                                              std::vector<std::string> labels) {
    if (n == 0) {
      throw Error(ErrorKind::range_error, "a semigroup must be non-empty");
    }
    if (table.size() != n * n) {
      throw Error(ErrorKind::range_error, "table must have n*n entries");
    }
    if (!labels.empty() && labels.size() != n) {
      throw Error(ErrorKind::range_error, "need one label per element");
    }
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k] >= n) {
        throw Error(ErrorKind::range_error,
                    "entry " + std::to_string(table[k]) + " at ("
                        + std::to_string(k / n) + ", " + std::to_string(k % n)
                        + ") is out of range");
      }
    }
    if (auto bad = simd::find_associativity_violation(table, n)) {
      auto [i, j, k] = *bad;
      throw Error(ErrorKind::associativity_violation,
                  "(" + std::to_string(i) + "*" + std::to_string(j) + ")*"
                      + std::to_string(k) + " != " + std::to_string(i) + "*("
                      + std::to_string(j) + "*" + std::to_string(k) + ")");
    }

    FiniteSemigroup s;
    s._n      = n;
    s._table  = std::move(table);
    s._labels = std::move(labels);
    for (Elem e = 0; e < n && !s._identity; ++e) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = s.mul(e, x) == x && s.mul(x, e) == x;
      }
      if (ok) {
        s._identity = e;
      }
    }
    for (Elem z = 0; z < n && !s._zero; ++z) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = s.mul(z, x) == z && s.mul(x, z) == z;
      }
      if (ok) {
        s._zero = z;
      }
    }
    return s;
  }

  std::string FiniteSemigroup::label(Elem a) const {
    if (a == kOne) {
      return "1";
    }
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  Transformation Transformation::then(Transformation const& g) const {
    if (g.degree() != degree()) {
      throw Error(ErrorKind::degree_mismatch, "cannot compose transformations "
                                              "of different degrees");
    }
    Transformation out;
    out.images.resize(degree());
    simd::gather(g.images, images, out.images);
    return out;
  }

  namespace {

    struct Enumeration {
      std::vector<Transformation> elements;
      std::vector<std::string>    words;
    };

    Enumeration enumerate(std::size_t                        degree,
                          std::vector<Transformation> const& gens) {
      if (gens.empty()) {
        throw Error(ErrorKind::degree_mismatch, "need at least one generator");
      }
      if (degree == 0) {
        throw Error(ErrorKind::degree_mismatch, "degree must be positive");
      }
      for (auto const& g : gens) {
        if (g.degree() != degree) {
          throw Error(ErrorKind::degree_mismatch,
                      "generator of degree " + std::to_string(g.degree())
                          + ", expected " + std::to_string(degree));
        }
        for (auto x : g.images) {
          if (x >= degree) {
            throw Error(ErrorKind::range_error, "image out of range");
          }
        }
      }

      Enumeration                                                     out;
      std::unordered_map<std::vector<Elem>, std::size_t, ImagesHash> index;
      auto add = [&](Transformation t, std::string word) {
        if (index.emplace(t.images, out.elements.size()).second) {
          if (out.elements.size() >= kMaxEnumeratedSize) {
            throw Error(ErrorKind::size_limit_exceeded,
                        "closure exceeds "
                            + std::to_string(kMaxEnumeratedSize)
                            + " elements");
          }
          out.elements.push_back(std::move(t));
          out.words.push_back(std::move(word));
        }
      };
      for (std::size_t k = 0; k < gens.size(); ++k) {
        add(gens[k], generator_name(k));
      }
      for (std::size_t i = 0; i < out.elements.size(); ++i) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
          auto product = out.elements[i].then(gens[k]);
          add(std::move(product), out.words[i] + generator_name(k));
        }
      }
      return out;
    }

  }  // namespace

  std::vector<Transformation>
  enumerate_transformations(std::size_t                        degree,
                            std::vector<Transformation> const& gens) {
    return enumerate(degree, gens).elements;
  }

  FiniteSemigroup from_transformations(std::size_t                        degree,
                                       std::vector<Transformation> const& gens) {
    auto [elements, words] = enumerate(degree, gens);
    std::size_t const n    = elements.size();

    std::unordered_map<std::vector<Elem>, Elem, ImagesHash> index;
    for (std::size_t i = 0; i < n; ++i) {
      index.emplace(elements[i].images, Elem(i));
    }
    std::vector<Elem> table(n * n);
    Transformation    product;
    product.images.resize(degree);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        simd::gather(elements[j].images, elements[i].images, product.images);
        table[i * n + j] = index.at(product.images);
      }
    }
    return FiniteSemigroup::from_table(n, std::move(table), std::move(words));
  }

  namespace {

    std::vector<std::string> extended_labels(FiniteSemigroup const& s,
                                             std::string            extra) {
      std::vector<std::string> labels;
      labels.reserve(s.size() + 1);
      for (Elem x = 0; x < s.size(); ++x) {
        labels.push_back(s.label(x));
      }
      labels.push_back(std::move(extra));
      return labels;
    }

  }  // namespace

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s,
                                  bool                   only_if_missing) {
    if (only_if_missing && s.identity()) {
      return s;
    }
    std::size_t const n = s.size();
    std::vector<Elem> table((n + 1) * (n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        table[i * (n + 1) + j]
            = i == n ? Elem(j) : (j == n ? Elem(i) : s.mul(Elem(i), Elem(j)));
      }
    }
    return FiniteSemigroup::from_table(n + 1,
                                       std::move(table),
                                       extended_labels(s, "1"));
  }

  FiniteSemigroup adjoin_zero(FiniteSemigroup const& s, bool only_if_missing) {
    if (only_if_missing && s.zero()) {
      return s;
    }
    std::size_t const n = s.size();
    std::vector<Elem> table((n + 1) * (n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        table[i * (n + 1) + j]
            = (i == n || j == n) ? Elem(n) : s.mul(Elem(i), Elem(j));
      }
    }
    return FiniteSemigroup::from_table(n + 1,
                                       std::move(table),
                                       extended_labels(s, "0"));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& m,
                                 FiniteSemigroup const& n) {
    std::size_t const a = m.size(), b = n.size(), size = a * b;
    std::vector<Elem> table(size * size);
    std::vector<std::string> labels(size);
    for (std::size_t x = 0; x < size; ++x) {
      labels[x] = "(" + m.label(Elem(x / b)) + "," + n.label(Elem(x % b)) + ")";
      for (std::size_t y = 0; y < size; ++y) {
        table[x * size + y] = m.mul(Elem(x / b), Elem(y / b)) * Elem(b)
                              + n.mul(Elem(x % b), Elem(y % b));
      }
    }
    return FiniteSemigroup::from_table(size, std::move(table), std::move(labels));
  }

  bool is_two_sided_ideal(FiniteSemigroup const&   s,
                          std::vector<Elem> const& ideal,
                          std::pair<Elem, Elem>*   witness) {
    ElementSet in(s.size());
    for (auto x : ideal) {
      in.insert(x);
    }
    for (auto a : ideal) {
      for (Elem t = 0; t < s.size(); ++t) {
        if (!in.contains(s.mul(a, t))) {
          if (witness != nullptr) {
            *witness = {a, t};
          }
          return false;
        }
        if (!in.contains(s.mul(t, a))) {
          if (witness != nullptr) {
            *witness = {t, a};
          }
          return false;
        }
      }
    }
    return true;
  }

  FiniteSemigroup rees_quotient(FiniteSemigroup const&   s,
                                std::vector<Elem> const& ideal) {
    if (ideal.empty()) {
      throw Error(ErrorKind::not_an_ideal, "the ideal must be non-empty");
    }
    for (auto x : ideal) {
      if (x >= s.size()) {
        throw Error(ErrorKind::range_error, "ideal element out of range");
      }
    }
    std::pair<Elem, Elem> bad;
    if (!is_two_sided_ideal(s, ideal, &bad)) {
      throw Error(ErrorKind::not_an_ideal,
                  std::to_string(bad.first) + "*" + std::to_string(bad.second)
                      + " leaves the ideal");
    }
    ElementSet in(s.size());
    for (auto x : ideal) {
      in.insert(x);
    }
    std::vector<Elem> kept;
    for (Elem x = 0; x < s.size(); ++x) {
      if (!in.contains(x)) {
        kept.push_back(x);
      }
    }
    std::size_t const        m    = kept.size() + 1;
    Elem const               zero = Elem(kept.size());
    std::vector<Elem>        pos(s.size(), zero);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      pos[kept[k]] = Elem(k);
      labels.push_back(s.label(kept[k]));
    }
    labels.push_back("0");
    std::vector<Elem> table(m * m, zero);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = 0; j < kept.size(); ++j) {
        table[i * m + j] = pos[s.mul(kept[i], kept[j])];
      }
    }
    return FiniteSemigroup::from_table(m, std::move(table), std::move(labels));
  }

  FiniteSemigroup transpose(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    std::vector<Elem> table(n * n);
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        table[std::size_t(i) * n + j] = s.mul(j, i);
      }
    }
    return FiniteSemigroup::from_table(n, std::move(table), s.labels());
  }

  FiniteSemigroup relabel(FiniteSemigroup const&   s,
                          std::vector<Elem> const& perm) {
    std::size_t const n = s.size();
    if (perm.size() != n) {
      throw Error(ErrorKind::range_error, "permutation has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p]) {
        throw Error(ErrorKind::range_error, "not a permutation");
      }
      seen[p] = true;
    }
    std::vector<Elem>        table(n * n);
    std::vector<std::string> labels;
    if (!s.labels().empty()) {
      labels.resize(n);
    }
    for (Elem i = 0; i < n; ++i) {
      if (!labels.empty()) {
        labels[perm[i]] = s.label(i);
      }
      for (Elem j = 0; j < n; ++j) {
        table[std::size_t(perm[i]) * n + perm[j]] = perm[s.mul(i, j)];
      }
    }
    return FiniteSemigroup::from_table(n, std::move(table), std::move(labels));
  }

  SubsetClosure subsemigroup_closure(FiniteSemigroup const&   s,
                                     std::vector<Elem> const& seed) {
    ElementSet        in(s.size());
    std::vector<Elem> gens, order;
    for (auto x : seed) {
      if (x >= s.size()) {
        throw Error(ErrorKind::range_error, "seed element out of range");
      }
      if (!in.contains(x)) {
        in.insert(x);
        gens.push_back(x);
        order.push_back(x);
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto g : gens) {
        Elem p = s.mul(order[i], g);
        if (!in.contains(p)) {
          in.insert(p);
          order.push_back(p);
        }
      }
    }
    return {in.members(), true};
  }

  bool is_closed(FiniteSemigroup const& s, std::vector<Elem> const& members) {
    ElementSet in(s.size());
    for (auto x : members) {
      in.insert(x);
    }
    for (auto a : members) {
      for (auto b : members) {
        if (!in.contains(s.mul(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteSemigroup restrict_to(FiniteSemigroup const&   s,
                              std::vector<Elem> const& members) {
    std::vector<Elem> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) {
      throw Error(ErrorKind::not_closed, "empty subset");
    }
    std::vector<Elem> pos(s.size(), kOne);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted[k] >= s.size()) {
        throw Error(ErrorKind::range_error, "member out of range");
      }
      pos[sorted[k]] = Elem(k);
    }
    std::size_t const        m = sorted.size();
    std::vector<Elem>        table(m * m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(s.label(sorted[i]));
      for (std::size_t j = 0; j < m; ++j) {
        Elem p = pos[s.mul(sorted[i], sorted[j])];
        if (p == kOne) {
          throw Error(ErrorKind::not_closed,
                      std::to_string(sorted[i]) + "*"
                          + std::to_string(sorted[j])
                          + " leaves the subset");
        }
        table[i * m + j] = p;
      }
    }
    return FiniteSemigroup::from_table(m, std::move(table), std::move(labels));
  }

  std::vector<Elem> small_generating_set(FiniteSemigroup const& s) {
    std::vector<Elem> gens;
    ElementSet        generated(s.size());
    for (Elem x = 0; x < s.size(); ++x) {
      if (!generated.contains(x)) {
        gens.push_back(x);
        for (auto y : subsemigroup_closure(s, gens).members) {
          generated.insert(y);
        }
      }
    }
    return gens;
  }

}  // namespace sgt
