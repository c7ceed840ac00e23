#include "catch2/catch_amalgamated.hpp"

#include "oracles.hpp"
#include "sgt/congruence.hpp"
#include "sgt/green.hpp"
#include "sgt/library.hpp"
#include "sgt/verify.hpp"

using namespace sgt;

namespace {

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::internal_assert_failure;
  }

  void require_pass(VerificationReport const& r) {
    CAPTURE(r.construction, r.inputs_summary);
    REQUIRE(r.pass);
    REQUIRE_FALSE(r.witness);
    REQUIRE_FALSE(r.missing);
    if (r.expected) {
      REQUIRE(r.computed);
      REQUIRE(*r.expected == *r.computed);
    }
  }

}  // namespace

TEST_CASE("finite generation of right congruences", "[verify]") {
  auto const z4 = cyclic_group(4);
  for (auto const& rho : enumerate_right_congruences(z4).congruences) {
    require_pass(verify_fg_gens(z4, {1}, rho));
  }
  auto const t3 = *library_semigroup("T3");
  auto const rho = rc_generate(t3, {{0, 1}});
  require_pass(verify_fg_gens(t3, small_generating_set(t3), rho));

  REQUIRE(kind_of([&] {
            verify_fg_gens(z4, {2}, RightCongruence::identity(4));
          })
          == ErrorKind::not_generating);
  REQUIRE(kind_of([&] { verify_fg_gens(z4, {9}, RightCongruence::identity(4)); })
          == ErrorKind::range_error);
}

TEST_CASE("generators from the L relation", "[verify]") {
  for (auto const& name : {"T2", "T3", "B2", "RB2x2", "chain3"}) {
    CAPTURE(name);
    auto const s = *library_semigroup(name);
    auto const r = verify_lclass_gens(s);
    require_pass(r);
    REQUIRE(r.generated_size == s.size());
    REQUIRE(r.target_size == s.size());
  }
  auto const t2 = *library_semigroup("T2");
  PairSet    l_pairs;
  for (auto const& members : green_data(t2).l.classes()) {
    for (auto a : members) {
      for (auto b : members) {
        l_pairs.insert(a, b);
      }
    }
  }
  require_pass(verify_lclass_gens(t2, l_pairs));
  REQUIRE(kind_of([&] { verify_lclass_gens(t2, PairSet{{0, 1}}); })
          == ErrorKind::precondition_failed);
}

TEST_CASE("direct products of monoids", "[verify]") {
  auto const m  = cyclic_group(2);
  auto const n  = chain(2);
  auto const mn = direct_product(m, n);
  for (auto const& rho : enumerate_right_congruences(mn).congruences) {
    require_pass(verify_dp_gens(m, n, rho));
  }
  REQUIRE(kind_of([&] {
            verify_dp_gens(left_zero(2), n, RightCongruence::identity(4));
          })
          == ErrorKind::not_monoids);
}

TEST_CASE("Schutzenberger group generators", "[verify]") {
  auto const t3 = *library_semigroup("T3");
  for (Elem a = 0; a < t3.size(); ++a) {
    auto const r = verify_schutz_gens(t3, a);
    require_pass(r);
    REQUIRE(r.target_size == schutzenberger(t3, a).group.size());
  }
  REQUIRE(kind_of([&] { verify_schutz_gens(t3, 27); }) == ErrorKind::range_error);
}

TEST_CASE("quotients by homomorphisms", "[verify]") {
  auto const        z4 = cyclic_group(4), z2 = cyclic_group(2);
  std::vector<Elem> theta{0, 1, 0, 1};
  for (auto const& rho : enumerate_right_congruences(z2).congruences) {
    require_pass(verify_quotient_gens(z4, theta, z2, rho));
  }
  std::vector<Elem> id{0, 1, 2, 3};
  require_pass(verify_quotient_gens(z4, id, z4, rc_generate(z4, {{0, 2}})));

  auto const any = RightCongruence::identity(2);
  REQUIRE(kind_of([&] { verify_quotient_gens(z4, {0, 1, 1, 0}, z2, any); })
          == ErrorKind::not_homomorphism);
  REQUIRE(kind_of([&] { verify_quotient_gens(z4, {0, 0, 0, 0}, z2, any); })
          == ErrorKind::not_surjective);
  REQUIRE(kind_of([&] { verify_quotient_gens(z4, {0, 1}, z2, any); })
          == ErrorKind::mismatched_input);
}

TEST_CASE("ideals with an internal identity", "[verify]") {
  auto const c3 = chain(3);
  for (auto const& rho : enumerate_right_congruences(chain(2)).congruences) {
    require_pass(verify_ideal_gens(c3, {0, 1}, 1, rho));
  }
  auto const z0 = *library_semigroup("Z2^0");
  require_pass(verify_ideal_gens(z0, {0, 1, 2}, 0, RightCongruence::identity(3)));

  REQUIRE(kind_of([&] {
            verify_ideal_gens(c3, {1}, 1, RightCongruence::identity(1));
          })
          == ErrorKind::not_an_ideal);
  REQUIRE(kind_of([&] {
            verify_ideal_gens(nilpotent_cyclic(3), {0, 1, 2}, 0,
                              RightCongruence::identity(3));
          })
          == ErrorKind::no_internal_identity);
}

TEST_CASE("extending a right congruence", "[verify]") {
  auto const t2  = *library_semigroup("T2");
  auto const all = enumerate_right_congruences(t2).congruences;
  std::size_t checked = 0;
  for (auto const& rho : all) {
    for (auto const& sigma : all) {
      if (rho.refines(sigma)) {
        require_pass(verify_extend_gens(t2, rho, sigma));
        ++checked;
      }
    }
  }
  REQUIRE(checked > all.size());
  REQUIRE(kind_of([&] {
            verify_extend_gens(t2, RightCongruence::universal(4),
                               RightCongruence::identity(4));
          })
          == ErrorKind::not_refinement);
}

TEST_CASE("the diagonal act", "[verify]") {
  auto const trivial = verify_diagonal(cyclic_group(1));
  REQUIRE(trivial.pass);
  REQUIRE(trivial.witness == Pair(0, 0));
  for (auto const& [name, s] : library()) {
    CAPTURE(name);
    auto const r = verify_diagonal(s);
    REQUIRE(r.pass);
    REQUIRE(r.witness.has_value() == (s.size() == 1));
  }
}

TEST_CASE("isomorphism search", "[verify]") {
  REQUIRE_FALSE(isomorphic(cyclic_group(4), *library_semigroup("K4")));
  REQUIRE_FALSE(isomorphic(left_zero(2), right_zero(2)));
  REQUIRE_FALSE(isomorphic(cyclic_group(3), cyclic_group(2)));
  auto const iso = isomorphic(cyclic_group(5), relabel(cyclic_group(5), {3, 1, 4, 0, 2}));
  REQUIRE(iso);
  REQUIRE(oracle::is_isomorphism(cyclic_group(5),
                                 relabel(cyclic_group(5), {3, 1, 4, 0, 2}), *iso));
  REQUIRE(kind_of([] {
            isomorphic(*library_semigroup("T3"), *library_semigroup("T3"));
          })
          == ErrorKind::size_limit_exceeded);
}

TEST_CASE("sweeps are reproducible and pass", "[verify][sweep]") {
  SweepOptions opts;
  opts.exhaustive_limit = 4;
  opts.samples          = 10;
  opts.max_size         = 8;
  opts.schutz_limit     = 4;
  opts.dp_limit         = 2;
  auto const a = run_sweep(opts);
  auto const b = run_sweep(opts);
  REQUIRE(a.pass());
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    REQUIRE(a.rows[k].construction == b.rows[k].construction);
    REQUIRE(a.rows[k].runs == b.rows[k].runs);
    REQUIRE(a.rows[k].runs > 0);
  }

  opts.use_full_pairs = true;
  REQUIRE(run_sweep(opts).pass());

  auto const t3  = *library_semigroup("T3");
  auto const one = sweep_congruences(t3, 5, 20);
  REQUIRE(one == sweep_congruences(t3, 5, 20));
  for (auto const& rho : one) {
    REQUIRE(is_right_congruence(t3, rho));
  }
}
