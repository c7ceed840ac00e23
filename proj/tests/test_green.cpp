#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "oracles.hpp"
#include "sgt/green.hpp"
#include "sgt/library.hpp"
#include "sgt/verify.hpp"

using namespace sgt;

namespace {

  FiniteSemigroup random_transformation_semigroup(std::mt19937& rng,
                                                  std::size_t   degree) {
    std::uniform_int_distribution<Elem> image(0, Elem(degree - 1));
    std::uniform_int_distribution<int>  count(1, 3);
    std::vector<Transformation>         gens(std::size_t(count(rng)));
    for (auto& g : gens) {
      for (std::size_t x = 0; x < degree; ++x) {
        g.images.push_back(image(rng));
      }
    }
    return from_transformations(degree, gens);
  }

}  // namespace

TEST_CASE("T2 egg-box", "[green]") {
  // a = swap, b = const0, aa = id, ba = const1
  auto const t2 = *library_semigroup("T2");
  auto const g  = green_data(t2);
  REQUIRE(g.r.index() == 2);
  REQUIRE(g.l.index() == 3);
  REQUIRE(g.h.index() == 3);
  REQUIRE(g.d.index() == 2);
  REQUIRE(g.d == g.j);
  REQUIRE(maximal_subgroups(t2).size() == 3);
}

TEST_CASE("groups, rectangular bands and chains", "[green]") {
  auto g = green_data(cyclic_group(6));
  REQUIRE(g.r.is_universal());
  REQUIRE(g.h.is_universal());
  auto subgroups = maximal_subgroups(cyclic_group(6));
  REQUIRE(subgroups.size() == 1);
  REQUIRE(subgroups.front().group == cyclic_group(6));

  g = green_data(rectangular_band(2, 2));
  REQUIRE(g.r.index() == 2);
  REQUIRE(g.l.index() == 2);
  REQUIRE(g.h.is_identity());
  REQUIRE(g.d.is_universal());

  auto const c3 = maximal_subgroups(chain(3));
  REQUIRE(c3.size() == 3);
  for (auto const& m : c3) {
    REQUIRE(m.group.size() == 1);
  }
}

TEST_CASE("Green's relations match their definitions", "[green][property]") {
  for (auto const& [name, s] : library()) {
    if (s.size() > 27) {
      continue;
    }
    auto const g = green_data(s);
    CAPTURE(name);
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        bool const r = oracle::r_related(s, a, b);
        bool const l = oracle::l_related(s, a, b);
        REQUIRE(g.r.related(a, b) == r);
        REQUIRE(g.l.related(a, b) == l);
        REQUIRE(g.h.related(a, b) == (r && l));
        REQUIRE(g.j.related(a, b) == oracle::j_related(s, a, b));
      }
    }
    REQUIRE(g.d == g.j);
    REQUIRE(g.h.refines(g.r));
    REQUIRE(g.h.refines(g.l));
  }
}

TEST_CASE("Green's relations commute with relabelling", "[green][property]") {
  std::mt19937 rng(2);
  for (auto const& name : {"T3", "B2", "S3", "Z2xchain2"}) {
    auto const        s = *library_semigroup(name);
    std::vector<Elem> perm(s.size());
    std::iota(perm.begin(), perm.end(), Elem(0));
    std::shuffle(perm.begin(), perm.end(), rng);
    auto const t  = relabel(s, perm);
    auto const gs = green_data(s), gt = green_data(t);
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        REQUIRE(gs.r.related(a, b) == gt.r.related(perm[a], perm[b]));
        REQUIRE(gs.l.related(a, b) == gt.l.related(perm[a], perm[b]));
        REQUIRE(gs.d.related(a, b) == gt.d.related(perm[a], perm[b]));
      }
    }
  }
}

TEST_CASE("Schutzenberger group examples", "[green]") {
  auto sch = schutzenberger(cyclic_group(3), 0);
  REQUIRE(sch.group.size() == 3);
  REQUIRE(isomorphic(sch.group, cyclic_group(3)));
  REQUIRE(sch.stabilizer.back() == kOne);

  sch = schutzenberger(right_zero(2), 0);
  REQUIRE(sch.h_class == std::vector<Elem>{0});
  REQUIRE(sch.group.size() == 1);

  for (Elem a = 0; a < 4; ++a) {
    REQUIRE(schutzenberger(rectangular_band(2, 2), a).group.size() == 1);
  }
  REQUIRE_THROWS_AS(schutzenberger(cyclic_group(3), 3), Error);
}

TEST_CASE("Schutzenberger groups by definition", "[green][property]") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto const s = random_transformation_semigroup(rng, 4);
    auto const g = green_data(s);
    CAPTURE(trial, s.size());
    for (auto const& members : g.h.classes()) {
      auto const sch = schutzenberger(s, members.front());
      REQUIRE(sch.h_class == members);
      REQUIRE(sch.group.size() == members.size());
      REQUIRE(oracle::is_group(sch.group));

      // Stab(H) = {t in S^1 : Ht = H} scanned directly
      std::vector<Elem> stab;
      for (Elem t = 0; t <= s.size(); ++t) {
        std::set<Elem> image;
        for (auto h : members) {
          image.insert(oracle::mul1(s, h, t));
        }
        if (image == std::set<Elem>(members.begin(), members.end())) {
          stab.push_back(t == s.size() ? kOne : t);
        }
      }
      REQUIRE(sch.stabilizer == stab);

      // sigma: s ~ t iff hs = ht for every h
      for (std::size_t i = 0; i < stab.size(); ++i) {
        for (std::size_t j = 0; j < stab.size(); ++j) {
          bool same = std::all_of(members.begin(), members.end(), [&](Elem h) {
            return s.mul1(h, stab[i]) == s.mul1(h, stab[j]);
          });
          REQUIRE((sch.sigma_class_of[i] == sch.sigma_class_of[j]) == same);
        }
      }
      if (g.group_h[g.h.class_of(members.front())] && members.size() <= 8) {
        auto const iso = isomorphic(restrict_to(s, members), sch.group);
        REQUIRE(iso);
        REQUIRE(oracle::is_isomorphism(restrict_to(s, members), sch.group, *iso));
      }
    }
  }
}
