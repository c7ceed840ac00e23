#include "sgt/library.hpp"

#include <algorithm>

#include "sgt/structure.hpp"

namespace sgt {

  namespace {

    template <typename F>
    FiniteSemigroup tabulate(std::size_t              n,
                             F&&                      product,
                             std::vector<std::string> labels = {}) {
      std::vector<Elem> table(n * n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          table[std::size_t(a) * n + b] = product(a, b);
        }
      }
      return FiniteSemigroup::from_table(n, std::move(table), std::move(labels));
    }

    // M0[1; 2, 2; identity], the five element Brandt semigroup.
    FiniteSemigroup brandt_b2() {
      ReesStructure r{cyclic_group(1), 2, 2, {Elem(0), std::nullopt, std::nullopt, Elem(0)}, true};
      return rees_construct(r).semigroup;
    }

  }  // namespace

  FiniteSemigroup cyclic_group(std::size_t n) {
    std::vector<std::string> labels{"e"};
    for (std::size_t k = 1; k < n; ++k) {
      labels.push_back(k == 1 ? "g" : "g^" + std::to_string(k));
    }
    return tabulate(
        n, [n](Elem a, Elem b) { return Elem((a + b) % n); }, labels);
  }

  FiniteSemigroup chain(std::size_t n) {
    return tabulate(n, [](Elem a, Elem b) { return std::min(a, b); });
  }

  FiniteSemigroup left_zero(std::size_t n) {
    return tabulate(n, [](Elem a, Elem) { return a; });
  }

  FiniteSemigroup right_zero(std::size_t n) {
    return tabulate(n, [](Elem, Elem b) { return b; });
  }

  FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    return tabulate(
        rows * cols,
        [cols](Elem a, Elem b) { return Elem(a / cols * cols + b % cols); },
        labels);
  }

  FiniteSemigroup nilpotent_cyclic(std::size_t n) {
    // element k is a^(k+1) for k < n-1, element n-1 is the zero
    std::vector<std::string> labels;
    for (std::size_t k = 1; k < n; ++k) {
      labels.push_back(k == 1 ? "a" : "a^" + std::to_string(k));
    }
    labels.push_back("0");
    return tabulate(
        n,
        [n](Elem a, Elem b) { return Elem(std::min<std::size_t>(a + b + 1, n - 1)); },
        labels);
  }

  FiniteSemigroup full_transformation_monoid(std::size_t m) {
    std::vector<Transformation> gens;
    Transformation              swap{{}}, cycle{{}}, collapse{{}};
    for (Elem x = 0; x < m; ++x) {
      swap.images.push_back(x < 2 ? 1 - x : x);
      cycle.images.push_back(Elem((x + 1) % m));
      collapse.images.push_back(x == 1 ? 0 : x);
    }
    gens.push_back(swap);
    if (m > 2) {
      gens.push_back(cycle);
    }
    if (m > 1) {
      gens.push_back(collapse);
    }
    return from_transformations(m, gens);
  }

  std::vector<LibraryEntry> const& library() {
    static std::vector<LibraryEntry> const entries = [] {
      std::vector<LibraryEntry> out;
      out.push_back({"trivial", cyclic_group(1)});
      for (std::size_t n = 2; n <= 8; ++n) {
        out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
      }
      out.push_back({"K4", direct_product(cyclic_group(2), cyclic_group(2))});
      out.push_back({"S3",
                     from_transformations(3, {{{1, 0, 2}}, {{1, 2, 0}}})});
      out.push_back({"chain2", chain(2)});
      out.push_back({"chain3", chain(3)});
      for (std::size_t n = 2; n <= 4; ++n) {
        out.push_back({"LZ" + std::to_string(n), left_zero(n)});
      }
      for (std::size_t n = 2; n <= 4; ++n) {
        out.push_back({"RZ" + std::to_string(n), right_zero(n)});
      }
      out.push_back({"RB2x2", rectangular_band(2, 2)});
      out.push_back({"N3", nilpotent_cyclic(3)});
      out.push_back({"T2", full_transformation_monoid(2)});
      out.push_back({"T3", full_transformation_monoid(3)});
      out.push_back({"Z2^0", adjoin_zero(cyclic_group(2))});
      out.push_back({"Z2xchain2", direct_product(cyclic_group(2), chain(2))});
      out.push_back({"B2", brandt_b2()});
      out.push_back({"LZ2^1", adjoin_identity(left_zero(2))});
      out.push_back({"RZ2^1", adjoin_identity(right_zero(2))});
      out.push_back({"N2^1", adjoin_identity(nilpotent_cyclic(2))});
      return out;
    }();
    return entries;
  }

  std::optional<FiniteSemigroup> library_semigroup(std::string_view name) {
    for (auto const& entry : library()) {
      if (entry.name == name) {
        return entry.semigroup;
      }
    }
    return std::nullopt;
  }

  std::vector<LibraryEntry> const& small_monoids() {
    static std::vector<LibraryEntry> const entries = [] {
      std::vector<LibraryEntry> out;
      for (auto name :
           {"trivial", "Z2", "Z3", "chain2", "chain3", "LZ2^1", "RZ2^1", "N2^1"}) {
        out.push_back({name, *library_semigroup(name)});
      }
      return out;
    }();
    return entries;
  }

}  // namespace sgt
