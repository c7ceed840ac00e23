#include <random>
#include <set>

#include "catch2/catch_amalgamated.hpp"

#include "oracles.hpp"
#include "sgt/congruence.hpp"
#include "sgt/library.hpp"

using namespace sgt;

namespace {

  oracle::Labels labels_of(RightCongruence const& rho) {
    return rho.class_of();
  }

  oracle::Pairs as_pairs(PairSet const& x) {
    return {x.begin(), x.end()};
  }

  std::vector<LibraryEntry> small_library(std::size_t max_size) {
    std::vector<LibraryEntry> out;
    for (auto const& entry : library()) {
      if (entry.semigroup.size() <= max_size) {
        out.push_back(entry);
      }
    }
    return out;
  }

  // Subgroups of a group by closing every subset.
  std::size_t count_subgroups(FiniteSemigroup const& g) {
    std::set<std::vector<Elem>> found;
    for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
      std::vector<Elem> seed;
      for (Elem x = 0; x < g.size(); ++x) {
        if (mask >> x & 1u) {
          seed.push_back(x);
        }
      }
      found.insert(subsemigroup_closure(g, seed).members);
    }
    return found.size();
  }

}  // namespace

TEST_CASE("pair sets are sorted and deduplicated", "[congruence]") {
  PairSet x{{2, 1}, {0, 1}, {2, 1}};
  REQUIRE(x.size() == 2);
  REQUIRE(x.pairs().front() == Pair{0, 1});
  REQUIRE(x.symmetrized().size() == 4);
  REQUIRE(x.flipped() == PairSet{{1, 0}, {1, 2}});
}

TEST_CASE("canonical class maps", "[congruence]") {
  auto rho = RightCongruence::from_labels({7, 3, 7, 9});
  REQUIRE(rho.class_of() == std::vector<Elem>{0, 1, 0, 2});
  REQUIRE(rho.index() == 3);
  REQUIRE(rho.classes() == std::vector<std::vector<Elem>>{{0, 2}, {1}, {3}});
  REQUIRE(rho.representatives() == std::vector<Elem>{0, 1, 3});
  REQUIRE(rho.refines(RightCongruence::universal(4)));
  REQUIRE(RightCongruence::identity(4).refines(rho));
  REQUIRE_FALSE(rho.refines(RightCongruence::identity(4)));
  REQUIRE(spanning_pairs(rho) == PairSet{{2, 0}});
  REQUIRE(within_class_pairs(RightCongruence::universal(3))
          == PairSet{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("rc_generate examples", "[congruence]") {
  auto const c2 = chain(2);
  REQUIRE(rc_generate(c2, {{0, 1}}).is_universal());

  auto const rz3 = right_zero(3);
  auto const rho = rc_generate(rz3, {{0, 1}});
  REQUIRE(rho.index() == 2);
  REQUIRE(rho.classes() == std::vector<std::vector<Elem>>{{0, 1}, {2}});

  REQUIRE(rc_generate(cyclic_group(3), {{0, 1}}).is_universal());
  REQUIRE(rc_generate(cyclic_group(3), {}).is_identity());
}

TEST_CASE("rc_generate equals the partition oracle", "[congruence][property]") {
  for (auto const& [name, s] : small_library(4)) {
    auto const congs = oracle::right_congruences(s);
    CAPTURE(name);
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        oracle::Pairs x{{a, b}};
        REQUIRE(labels_of(rc_generate(s, PairSet{{a, b}}))
                == oracle::generated(s, congs, x));
      }
    }
  }
}

TEST_CASE("two-sided generation equals the two-sided oracle",
          "[congruence][property]") {
  for (auto const& [name, s] : small_library(5)) {
    std::vector<oracle::Labels> two_sided;
    for (auto const& p : oracle::all_partitions(s.size())) {
      if (oracle::right_compatible(s, p) && oracle::left_compatible(s, p)) {
        two_sided.push_back(p);
      }
    }
    CAPTURE(name);
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = a + 1; b < s.size(); ++b) {
        auto const rho = rc_generate(s, PairSet{{a, b}}, true);
        REQUIRE(labels_of(rho) == oracle::generated(s, two_sided, {{a, b}}));
        REQUIRE(is_two_sided_congruence(s, rho));
      }
    }
  }
}

TEST_CASE("generation is monotone and ignores orientation",
          "[congruence][property]") {
  std::mt19937 rng(5);
  for (auto const& [name, s] : library()) {
    if (s.size() > 27) {
      continue;
    }
    std::uniform_int_distribution<Elem> pick(0, Elem(s.size() - 1));
    for (int trial = 0; trial < 20; ++trial) {
      PairSet x, y;
      for (int k = 0; k < 2; ++k) {
        x.insert(pick(rng), pick(rng));
      }
      y = x;
      y.insert(pick(rng), pick(rng));
      auto const rx = rc_generate(s, x);
      CAPTURE(name, trial);
      REQUIRE(rx.refines(rc_generate(s, y)));
      REQUIRE(rx == rc_generate(s, x.symmetrized()));
      REQUIRE(rx == rc_generate(s, x.flipped()));
      REQUIRE(is_right_congruence(s, rx));
      REQUIRE(oracle::right_compatible(s, rx.class_of()));
    }
  }
}

TEST_CASE("extend and join", "[congruence]") {
  auto const s     = right_zero(4);
  auto const rho   = rc_generate(s, {{0, 1}});
  auto const sigma = rc_generate(s, {{2, 3}});
  auto const both  = rc_generate(s, {{0, 1}, {2, 3}});
  REQUIRE(rc_extend(s, rho, {{2, 3}}) == both);
  REQUIRE(rc_join(s, rho, sigma) == both);
  REQUIRE(rc_join(s, rho, RightCongruence::identity(4)) == rho);
}

TEST_CASE("enumeration matches the brute-force scan", "[congruence][property]") {
  for (auto const& [name, s] : small_library(5)) {
    auto const found = enumerate_right_congruences(s).congruences;
    std::set<oracle::Labels> from_lib, from_oracle;
    for (auto const& rho : found) {
      from_lib.insert(rho.class_of());
    }
    for (auto const& p : oracle::right_congruences(s)) {
      from_oracle.insert(p);
    }
    CAPTURE(name);
    REQUIRE(from_lib.size() == found.size());
    REQUIRE(from_lib == from_oracle);
    REQUIRE(std::is_sorted(found.begin(), found.end(), canonical_less));
    REQUIRE(found.front().is_identity());
    REQUIRE(found.back().is_universal());
  }
}

TEST_CASE("enumeration examples and cap", "[congruence]") {
  REQUIRE(enumerate_right_congruences(right_zero(3)).congruences.size() == 5);
  REQUIRE(enumerate_right_congruences(cyclic_group(4)).congruences.size() == 3);
  REQUIRE(enumerate_right_congruences(cyclic_group(1)).congruences.size() == 1);
  try {
    enumerate_right_congruences(right_zero(4), 10);
    FAIL("cap not enforced");
  } catch (CapExceeded const& e) {
    // aborts on the first congruence past the cap
    REQUIRE(e.partial_count() == 11);
    REQUIRE(e.kind() == ErrorKind::cap_exceeded);
  }
  REQUIRE(enumerate_right_congruences(right_zero(4), 15).congruences.size() == 15);
}

TEST_CASE("right congruences of groups match subgroups", "[congruence][property]") {
  for (auto const& name : {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "K4", "S3"}) {
    auto const g = *library_semigroup(name);
    CAPTURE(name);
    REQUIRE(enumerate_right_congruences(g).congruences.size() == count_subgroups(g));
  }
}

TEST_CASE("X-sequences are sound and shortest", "[congruence][property]") {
  std::mt19937 rng(23);
  for (auto const& [name, s] : small_library(8)) {
    std::uniform_int_distribution<Elem> pick(0, Elem(s.size() - 1));
    for (int trial = 0; trial < 6; ++trial) {
      PairSet x;
      for (int k = 0; k <= trial % 2; ++k) {
        x.insert(pick(rng), pick(rng));
      }
      auto const rho = rc_generate(s, x);
      for (Elem a = 0; a < s.size(); ++a) {
        for (Elem b = 0; b < s.size(); ++b) {
          auto const seq = find_x_sequence(s, x, a, b);
          CAPTURE(name, trial, a, b);
          REQUIRE(seq.has_value() == rho.related(a, b));
          REQUIRE(oracle::sequence_length(s, as_pairs(x), a, b)
                  == (seq ? std::optional<std::size_t>(seq->length()) : std::nullopt));
          if (!seq) {
            continue;
          }
          REQUIRE(check_x_sequence(s, x, *seq));
          // replay every identity of the sequence
          Elem current = a;
          for (auto const& st : seq->steps) {
            bool in_x = std::find(x.begin(), x.end(), Pair{st.x, st.y}) != x.end()
                        || std::find(x.begin(), x.end(), Pair{st.y, st.x}) != x.end();
            REQUIRE(in_x);
            REQUIRE(s.mul1(st.x, st.s) == current);
            current = s.mul1(st.y, st.s);
          }
          REQUIRE(current == b);
        }
      }
    }
  }
}

TEST_CASE("X-sequence examples", "[congruence]") {
  auto const z3 = cyclic_group(3);
  REQUIRE(find_x_sequence(z3, {{0, 1}}, 1, 1)->length() == 0);

  // e = g * g^2 and e * g^2 = g^2 is a single step
  auto const seq = find_x_sequence(z3, {{0, 1}}, 0, 2);
  REQUIRE(seq);
  REQUIRE(seq->length() == *oracle::sequence_length(z3, {{0, 1}}, 0, 2));
  REQUIRE(seq->length() == 1);
  REQUIRE(seq->steps.front() == XStep{1, 0, 2});

  REQUIRE_FALSE(find_x_sequence(right_zero(3), {{0, 1}}, 0, 2));
}

TEST_CASE("minimal generating pairs", "[congruence][property]") {
  REQUIRE(minimal_generating_pairs(cyclic_group(3), RightCongruence::identity(3))
              .pairs.empty());
  auto const z3 = minimal_generating_pairs(cyclic_group(3), RightCongruence::universal(3));
  REQUIRE(z3.pairs.size() == 1);
  REQUIRE(z3.optimal);
  auto const rz3 = minimal_generating_pairs(right_zero(3), RightCongruence::universal(3));
  REQUIRE(rz3.pairs.size() == 2);
  REQUIRE(rz3.optimal);

  for (auto const& [name, s] : small_library(5)) {
    for (auto const& rho : enumerate_right_congruences(s).congruences) {
      auto const gens = minimal_generating_pairs(s, rho);
      CAPTURE(name, rho.class_of());
      REQUIRE(rc_generate(s, gens.pairs) == rho);
      auto const candidates = within_class_pairs(rho).pairs();
      if (!gens.optimal || gens.pairs.empty()) {
        continue;
      }
      // no smaller subset of the candidates generates rho
      std::size_t const k = gens.pairs.size() - 1;
      std::vector<bool> choose(candidates.size(), false);
      std::fill(choose.begin(), choose.begin() + long(k), true);
      do {
        PairSet x;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (choose[i]) {
            x.insert(candidates[i].first, candidates[i].second);
          }
        }
        REQUIRE(rc_generate(s, x) != rho);
      } while (std::prev_permutation(choose.begin(), choose.end()));
    }
  }
  auto const greedy = minimal_generating_pairs(
      *library_semigroup("T3"), RightCongruence::universal(27));
  REQUIRE_FALSE(greedy.optimal);
  REQUIRE(rc_generate(*library_semigroup("T3"), greedy.pairs).is_universal());
}

TEST_CASE("diameters", "[congruence]") {
  REQUIRE(std::get<std::size_t>(rc_diameter(chain(2), {{0, 1}})) == 1);
  auto const d = rc_diameter(right_zero(3), {{0, 1}});
  REQUIRE(std::get<Disconnected>(d).index == 2);

  // the brute-force all-pairs search gives 1 for Z3 with X = {(e, g)}
  std::size_t expected = 0;
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      expected = std::max(expected, *oracle::sequence_length(cyclic_group(3), {{0, 1}}, a, b));
    }
  }
  REQUIRE(std::get<std::size_t>(rc_diameter(cyclic_group(3), {{0, 1}})) == expected);

  for (auto const& [name, s] : library()) {
    auto const x = minimal_generating_pairs(s, RightCongruence::universal(s.size())).pairs;
    auto const d = rc_diameter(s, x);
    CAPTURE(name);
    REQUIRE(std::holds_alternative<std::size_t>(d));
    REQUIRE(std::get<std::size_t>(d) < s.size());
  }
}

TEST_CASE("quotients by two-sided congruences", "[congruence]") {
  auto const z4  = cyclic_group(4);
  auto const rho = rc_generate(z4, {{0, 2}}, true);
  auto const q   = quotient_semigroup(z4, rho);
  REQUIRE(q == cyclic_group(2));
  REQUIRE(quotient_semigroup(z4, RightCongruence::identity(4)) == z4);
  REQUIRE(quotient_semigroup(z4, RightCongruence::universal(4)).size() == 1);

  // L is a right congruence on T2 but swap * const0 = const1 breaks left
  // compatibility
  auto const     t2 = *library_semigroup("T2");
  oracle::Labels l(t2.size());
  for (Elem a = 0; a < t2.size(); ++a) {
    l[a] = a;
    for (Elem b = 0; b < a; ++b) {
      if (oracle::l_related(t2, a, b)) {
        l[a] = l[b];
        break;
      }
    }
  }
  auto const rho_l = RightCongruence::from_labels(l);
  REQUIRE(is_right_congruence(t2, rho_l));
  REQUIRE(find_left_violation(t2, rho_l));
  try {
    quotient_semigroup(t2, rho_l);
    FAIL("accepted a one-sided congruence");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::not_two_sided);
  }
}
