#include "sgt/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "sgt/element_set.hpp"
#include "sgt/green.hpp"
#include "sgt/library.hpp"
#include "sgt/structure.hpp"

namespace sgt {

  namespace {

    std::string describe(RightCongruence const& rho) {
      std::string out = "[";
      for (std::size_t k = 0; k < rho.size(); ++k) {
        out += (k == 0 ? "" : " ") + std::to_string(rho.class_of(Elem(k)));
      }
      return out + "]";
    }

    PairSet generators_of(FiniteSemigroup const& s,
                          RightCongruence const& rho,
                          VerifyOptions          opts) {
      return opts.use_full_pairs ? within_class_pairs(rho)
                                 : minimal_generating_pairs(s, rho).pairs;
    }

    void require_congruence(FiniteSemigroup const& s,
                            RightCongruence const& rho,
                            std::string const&     what) {
      if (rho.size() != s.size()) {
        throw Error(ErrorKind::mismatched_input,
                    what + " has " + std::to_string(rho.size())
                        + " elements, expected " + std::to_string(s.size()));
      }
      if (!is_right_congruence(s, rho)) {
        throw Error(ErrorKind::precondition_failed,
                    what + " is not a right congruence");
      }
    }

    void compare(VerificationReport&    report,
                 RightCongruence const& expected,
                 RightCongruence        computed) {
      report.pass = expected == computed;
      if (!report.pass) {
        for (Elem a = 0; a < expected.size() && !report.witness; ++a) {
          for (Elem b = a + 1; b < expected.size(); ++b) {
            if (expected.related(a, b) != computed.related(a, b)) {
              report.witness = Pair{a, b};
              break;
            }
          }
        }
      }
      report.expected = expected;
      report.computed = std::move(computed);
    }

    void check_pairs_in_range(FiniteSemigroup const& s, PairSet const& x) {
      for (auto [a, b] : x) {
        if (a >= s.size() || b >= s.size()) {
          throw Error(ErrorKind::range_error, "pair element out of range");
        }
      }
    }

  }  // namespace

  VerificationReport verify_fg_gens(FiniteSemigroup const&   s,
                                    std::vector<Elem> const& x,
                                    RightCongruence const&   rho) {
    require_congruence(s, rho, "rho");
    for (auto g : x) {
      if (g >= s.size()) {
        throw Error(ErrorKind::range_error, "generator out of range");
      }
    }
    if (subsemigroup_closure(s, x).members.size() != s.size()) {
      throw Error(ErrorKind::not_generating, "X does not generate S");
    }
    VerificationReport report;
    report.construction   = "fg";
    report.inputs_summary = "|S|=" + std::to_string(s.size())
                            + " |X|=" + std::to_string(x.size())
                            + " rho=" + describe(rho);
    report.generators = x;

    auto const reps = rho.representatives();
    for (auto g : x) {
      report.pairs.insert(g, reps[rho.class_of(g)]);
    }
    for (auto alpha : reps) {
      for (auto g : x) {
        Elem p = s.mul(alpha, g);
        report.pairs.insert(p, reps[rho.class_of(p)]);
      }
    }
    compare(report, rho, rc_generate(s, report.pairs));
    return report;
  }

  VerificationReport verify_lclass_gens(FiniteSemigroup const& s,
                                        PairSet const&         x,
                                        VerifyOptions) {
    check_pairs_in_range(s, x);
    auto const l = green_data(s).l;
    if (rc_generate(s, x) != l) {
      throw Error(ErrorKind::precondition_failed,
                  "the pairs do not generate the L-relation");
    }
    VerificationReport report;
    report.construction   = "lclass";
    report.inputs_summary = "|S|=" + std::to_string(s.size())
                            + " |X|=" + std::to_string(x.size());
    report.pairs = x;

    std::vector<Elem> a;
    for (auto [p, q] : x.symmetrized()) {
      if (p == q) {
        continue;  // alpha is the adjoined identity, which adds nothing
      }
      Elem alpha = kOne;
      for (Elem t = 0; t < s.size() && alpha == kOne; ++t) {
        if (s.mul(t, q) == p) {
          alpha = t;
        }
      }
      if (alpha == kOne) {
        throw Error(ErrorKind::precondition_failed,
                    "no alpha with " + std::to_string(p) + " = alpha * "
                        + std::to_string(q));
      }
      a.push_back(alpha);
    }
    for (auto b : l.representatives()) {
      a.push_back(b);
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    report.generators = a;

    auto const closure    = subsemigroup_closure(s, a).members;
    report.generated_size = closure.size();
    report.target_size    = s.size();
    report.pass           = closure.size() == s.size();
    for (Elem t = 0; t < s.size() && !report.pass; ++t) {
      if (!std::binary_search(closure.begin(), closure.end(), t)) {
        report.missing = t;
        break;
      }
    }
    return report;
  }

  VerificationReport verify_lclass_gens(FiniteSemigroup const& s,
                                        VerifyOptions          opts) {
    auto const l = green_data(s).l;
    return verify_lclass_gens(s, generators_of(s, l, opts), opts);
  }

  VerificationReport verify_dp_gens(FiniteSemigroup const& m,
                                    FiniteSemigroup const& n,
                                    RightCongruence const& rho,
                                    VerifyOptions          opts) {
    if (!m.identity() || !n.identity()) {
      throw Error(ErrorKind::not_monoids, "both factors must be monoids");
    }
    auto const product = direct_product(m, n);
    require_congruence(product, rho, "rho");

    std::size_t const width = n.size();
    auto pair_elem = [&](Elem a, Elem b) { return Elem(a * width + b); };
    auto on_n      = [&](Elem a) {
      std::vector<Elem> labels(n.size());
      for (Elem b = 0; b < n.size(); ++b) {
        labels[b] = rho.class_of(pair_elem(a, b));
      }
      return RightCongruence::from_labels(labels);
    };
    auto on_m = [&](Elem b) {
      std::vector<Elem> labels(m.size());
      for (Elem a = 0; a < m.size(); ++a) {
        labels[a] = rho.class_of(pair_elem(a, b));
      }
      return RightCongruence::from_labels(labels);
    };

    VerificationReport report;
    report.construction   = "dp";
    report.inputs_summary = "|M|=" + std::to_string(m.size()) + " |N|="
                            + std::to_string(n.size()) + " rho=" + describe(rho);

    Elem const one_m = *m.identity();
    auto const rho_1 = on_n(one_m);
    auto const d     = rho_1.representatives();

    // alpha[i][j] for (i, j) in Q
    std::vector<std::vector<Elem>> alpha(rho.index(),
                                         std::vector<Elem>(d.size(), kOne));
    for (std::size_t j = 0; j < d.size(); ++j) {
      for (Elem a = 0; a < m.size(); ++a) {
        Elem& slot = alpha[rho.class_of(pair_elem(a, d[j]))][j];
        if (slot == kOne) {
          slot = a;
        }
      }
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (j != k && alpha[i][j] != kOne && alpha[i][k] != kOne) {
            report.pairs.insert(pair_elem(alpha[i][j], d[j]),
                                pair_elem(alpha[i][k], d[k]));
          }
        }
      }
    }
    for (auto [x, y] : generators_of(n, rho_1, opts)) {
      report.pairs.insert(pair_elem(one_m, x), pair_elem(one_m, y));
    }
    for (auto dj : d) {
      for (auto [x, y] : generators_of(m, on_m(dj), opts)) {
        report.pairs.insert(pair_elem(x, dj), pair_elem(y, dj));
      }
    }
    compare(report, rho, rc_generate(product, report.pairs));
    return report;
  }

  VerificationReport verify_schutz_gens(FiniteSemigroup const& s,
                                        Elem                   element,
                                        VerifyOptions          opts) {
    auto const        sch = schutzenberger(s, element);
    auto const        g   = green_data(s);
    std::size_t const n   = s.size();
    Elem const        r   = g.r.class_of(element);

    VerificationReport report;
    report.construction   = "schutz";
    report.inputs_summary = "|S|=" + std::to_string(n)
                            + " element=" + std::to_string(element);

    // rho on S^1 (index n is the adjoined identity): s rho t iff Hs = Ht
    // inside R, or both Hs and Ht lie outside R.
    auto const monoid = adjoin_identity(s);
    auto as_s1 = [&](Elem t) { return t == n ? kOne : t; };
    std::map<std::vector<Elem>, Elem> key_label;
    std::vector<Elem>                 labels(n + 1);
    for (Elem t = 0; t <= n; ++t) {
      std::vector<Elem> image;
      std::size_t       inside = 0;
      for (auto h : sch.h_class) {
        Elem ht = s.mul1(h, as_s1(t));
        image.push_back(ht);
        inside += g.r.class_of(ht) == r;
      }
      if (inside != 0 && inside != image.size()) {
        throw Error(ErrorKind::internal_assert_failure,
                    "Ht meets R without lying inside it");
      }
      if (inside == 0) {
        image.clear();
      } else {
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
      }
      labels[t] = key_label.emplace(image, Elem(key_label.size())).first->second;
    }
    auto const rho = RightCongruence::from_labels(labels);
    if (!is_right_congruence(monoid, rho)) {
      throw Error(ErrorKind::internal_assert_failure,
                  "stabilizer relation is not a right congruence");
    }
    report.pairs = generators_of(monoid, rho, opts);

    Elem const        h = sch.h_class.front();
    std::vector<Elem> a;
    for (auto [x, y] : report.pairs.symmetrized()) {
      Elem const hx = s.mul1(h, as_s1(x));
      if (g.r.class_of(hx) != r) {
        continue;
      }
      auto it = std::find_if(
          sch.stabilizer.begin(), sch.stabilizer.end(), [&](Elem alpha) {
            return s.mul1(s.mul1(h, alpha), as_s1(y)) == hx;
          });
      if (it == sch.stabilizer.end()) {
        throw Error(ErrorKind::internal_assert_failure,
                    "no stabilizer element alpha(x, y)");
      }
      a.push_back(sch.class_of_multiplier(*it));
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    report.generators = a;

    // subgroup generated by A: monoid closure of A and the identity class
    std::vector<bool> reached(sch.group.size(), false);
    std::vector<Elem> frontier{sch.class_of_multiplier(kOne)};
    reached[frontier.front()] = true;
    while (!frontier.empty()) {
      Elem c = frontier.back();
      frontier.pop_back();
      for (auto gen : a) {
        Elem next = sch.group.mul(c, gen);
        if (!reached[next]) {
          reached[next] = true;
          frontier.push_back(next);
        }
      }
    }
    report.generated_size = std::size_t(std::count(reached.begin(), reached.end(), true));
    report.target_size    = sch.group.size();
    report.pass           = report.generated_size == report.target_size;
    if (!report.pass) {
      report.missing = Elem(std::find(reached.begin(), reached.end(), false)
                            - reached.begin());
    }
    return report;
  }

  VerificationReport verify_quotient_gens(FiniteSemigroup const&   s,
                                          std::vector<Elem> const& theta,
                                          FiniteSemigroup const&   t,
                                          RightCongruence const&   rho,
                                          VerifyOptions            opts) {
    if (theta.size() != s.size()) {
      throw Error(ErrorKind::mismatched_input, "theta must map every element");
    }
    for (auto y : theta) {
      if (y >= t.size()) {
        throw Error(ErrorKind::range_error, "theta image out of range");
      }
    }
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        if (theta[s.mul(a, b)] != t.mul(theta[a], theta[b])) {
          throw Error(ErrorKind::not_homomorphism,
                      "theta(" + std::to_string(a) + "*" + std::to_string(b)
                          + ") differs from theta(" + std::to_string(a)
                          + ")*theta(" + std::to_string(b) + ")");
        }
      }
    }
    ElementSet image(t.size());
    for (auto y : theta) {
      image.insert(y);
    }
    if (image.count() != t.size()) {
      throw Error(ErrorKind::not_surjective, "theta is not surjective");
    }
    require_congruence(t, rho, "rho");

    VerificationReport report;
    report.construction   = "quotient";
    report.inputs_summary = "|S|=" + std::to_string(s.size())
                            + " |T|=" + std::to_string(t.size())
                            + " rho=" + describe(rho);

    std::vector<Elem> pulled(s.size());
    for (Elem a = 0; a < s.size(); ++a) {
      pulled[a] = rho.class_of(theta[a]);
    }
    auto const pullback = RightCongruence::from_labels(pulled);
    for (auto [x, y] : generators_of(s, pullback, opts)) {
      report.pairs.insert(theta[x], theta[y]);
    }
    compare(report, rho, rc_generate(t, report.pairs));
    return report;
  }

  VerificationReport verify_ideal_gens(FiniteSemigroup const&   s,
                                       std::vector<Elem> const& ideal,
                                       Elem                     e,
                                       RightCongruence const&   rho,
                                       VerifyOptions            opts) {
    std::vector<Elem> members = ideal;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto x : members) {
      if (x >= s.size()) {
        throw Error(ErrorKind::range_error, "ideal element out of range");
      }
    }
    if (members.empty() || !is_two_sided_ideal(s, members)) {
      throw Error(ErrorKind::not_an_ideal, "I is not a two-sided ideal");
    }
    if (!std::binary_search(members.begin(), members.end(), e)
        || std::any_of(members.begin(), members.end(), [&](Elem x) {
             return s.mul(e, x) != x || s.mul(x, e) != x;
           })) {
      throw Error(ErrorKind::no_internal_identity,
                  "e is not an identity of I");
    }
    auto const local = restrict_to(s, members);
    require_congruence(local, rho, "rho");
    std::vector<Elem> position(s.size(), kOne);
    for (std::size_t k = 0; k < members.size(); ++k) {
      position[members[k]] = Elem(k);
    }

    VerificationReport report;
    report.construction   = "ideal";
    report.inputs_summary = "|S|=" + std::to_string(s.size())
                            + " |I|=" + std::to_string(members.size())
                            + " e=" + std::to_string(e) + " rho=" + describe(rho);

    std::vector<Elem> lifted(s.size());
    for (Elem a = 0; a < s.size(); ++a) {
      lifted[a] = rho.class_of(position[s.mul(e, a)]);
    }
    auto const rho_s = RightCongruence::from_labels(lifted);
    for (auto [x, y] : generators_of(s, rho_s, opts)) {
      report.pairs.insert(position[s.mul(e, x)], position[s.mul(e, y)]);
    }
    compare(report, rho, rc_generate(local, report.pairs));
    return report;
  }

  VerificationReport verify_extend_gens(FiniteSemigroup const& s,
                                        RightCongruence const& rho,
                                        RightCongruence const& sigma,
                                        VerifyOptions          opts) {
    require_congruence(s, rho, "rho");
    require_congruence(s, sigma, "sigma");
    if (!rho.refines(sigma)) {
      throw Error(ErrorKind::not_refinement, "rho does not refine sigma");
    }
    VerificationReport report;
    report.construction   = "extend";
    report.inputs_summary = "|S|=" + std::to_string(s.size()) + " rho="
                            + describe(rho) + " sigma=" + describe(sigma);
    report.pairs     = generators_of(s, rho, opts);
    auto const reps  = rho.representatives();
    for (auto a : reps) {
      for (auto b : reps) {
        if (a != b && sigma.related(a, b)) {
          report.pairs.insert(a, b);
        }
      }
    }
    compare(report, sigma, rc_generate(s, report.pairs));
    return report;
  }

  VerificationReport verify_diagonal(FiniteSemigroup const& s) {
    VerificationReport report;
    report.construction   = "diagonal";
    report.inputs_summary = "|S|=" + std::to_string(s.size());
    auto const witness    = diagonal_cyclic_witness(s);
    if (witness) {
      report.pairs.insert(witness->first, witness->second);
    }
    report.pass = s.size() == 1 ? witness == Pair{0, 0} : !witness;
    report.witness = witness;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Invariants preserved by isomorphisms.
    std::vector<std::array<std::size_t, 5>> profiles(FiniteSemigroup const& s) {
      std::size_t const                       n = s.size();
      std::vector<std::array<std::size_t, 5>> out(n);
      for (Elem a = 0; a < n; ++a) {
        // index and period of the monogenic subsemigroup
        std::vector<Elem> powers{a};
        std::size_t       index = 0, period = 0;
        while (true) {
          Elem next = s.mul(powers.back(), a);
          auto it   = std::find(powers.begin(), powers.end(), next);
          if (it != powers.end()) {
            index  = std::size_t(it - powers.begin());
            period = powers.size() - index;
            break;
          }
          powers.push_back(next);
        }
        ElementSet right(n), left(n);
        right.insert(a);
        left.insert(a);
        for (Elem t = 0; t < n; ++t) {
          right.insert(s.mul(a, t));
          left.insert(s.mul(t, a));
        }
        out[a] = {std::size_t(s.is_idempotent(a)), index, period, right.count(),
                  left.count()};
      }
      return out;
    }

    struct IsoSearch {
      FiniteSemigroup const&                         s;
      FiniteSemigroup const&                         t;
      std::vector<std::array<std::size_t, 5>> const& ps;
      std::vector<std::array<std::size_t, 5>> const& pt;
      std::vector<Elem>                              f;
      std::vector<Elem>                              inverse;

      bool consistent(Elem a) const {
        for (Elem b = 0; b <= a; ++b) {
          for (auto [x, y] : {Pair{a, b}, Pair{b, a}}) {
            Elem xy    = s.mul(x, y);
            Elem image = t.mul(f[x], f[y]);
            if (f[xy] != kOne ? f[xy] != image
                              : (inverse[image] != kOne && inverse[image] != xy)) {
              return false;
            }
          }
        }
        return true;
      }

      bool extend(Elem a) {
        if (a == s.size()) {
          return true;
        }
        for (Elem b = 0; b < t.size(); ++b) {
          if (inverse[b] != kOne || ps[a] != pt[b]) {
            continue;
          }
          f[a]       = b;
          inverse[b] = a;
          if (consistent(a) && extend(a + 1)) {
            return true;
          }
          f[a]       = kOne;
          inverse[b] = kOne;
        }
        return false;
      }
    };

  }  // namespace

  std::optional<std::vector<Elem>> isomorphic(FiniteSemigroup const& s,
                                              FiniteSemigroup const& t,
                                              std::size_t size_limit) {
    if (s.size() > size_limit || t.size() > size_limit) {
      throw Error(ErrorKind::size_limit_exceeded,
                  "isomorphism search is limited to " + std::to_string(size_limit)
                      + " elements");
    }
    if (s.size() != t.size()) {
      return std::nullopt;
    }
    auto const ps = profiles(s), pt = profiles(t);
    IsoSearch  search{s,
                     t,
                     ps,
                     pt,
                     std::vector<Elem>(s.size(), kOne),
                     std::vector<Elem>(t.size(), kOne)};
    if (!search.extend(0)) {
      return std::nullopt;
    }
    return search.f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Library sweep
  ////////////////////////////////////////////////////////////////////////

  std::vector<RightCongruence> sweep_congruences(FiniteSemigroup const& s,
                                                 std::size_t exhaustive_limit,
                                                 std::size_t samples) {
    if (s.size() <= exhaustive_limit) {
      return enumerate_right_congruences(s).congruences;
    }
    std::vector<RightCongruence> out{RightCongruence::identity(s.size()),
                                     RightCongruence::universal(s.size())};
    std::mt19937                            rng(0x5347);
    std::uniform_int_distribution<Elem>     pick(0, Elem(s.size() - 1));
    for (std::size_t attempt = 0; attempt < 20 * samples && out.size() < samples;
         ++attempt) {
      PairSet x;
      x.insert(pick(rng), pick(rng));
      if (attempt % 2 == 1) {
        x.insert(pick(rng), pick(rng));
      }
      auto rho = rc_generate(s, x);
      if (std::find(out.begin(), out.end(), rho) == out.end()) {
        out.push_back(std::move(rho));
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  SweepResult run_sweep(SweepOptions const& opts) {
    std::vector<std::string> const names{
        "fg", "lclass", "dp", "schutz", "quotient", "ideal", "extend", "diagonal"};
    SweepResult result;
    for (auto const& name : names) {
      result.rows.push_back({name, 0, 0});
    }
    VerifyOptions const vopts{opts.use_full_pairs};

    auto record = [&](std::size_t row, std::string const& where, auto&& run) {
      ++result.rows[row].runs;
      VerificationReport report;
      try {
        report = run();
      } catch (Error const& e) {
        report.construction   = names[row];
        report.inputs_summary = std::string(e.what());
        report.pass           = false;
      }
      if (!report.pass) {
        ++result.rows[row].failures;
        report.inputs_summary = where + ": " + report.inputs_summary;
        result.failed.push_back(std::move(report));
      }
    };

    for (auto const& [name, s] : library()) {
      if (s.size() > opts.max_size) {
        continue;
      }
      auto const congs
          = sweep_congruences(s, opts.exhaustive_limit, opts.samples);
      auto const gens = small_generating_set(s);
      for (auto const& rho : congs) {
        record(0, name, [&] { return verify_fg_gens(s, gens, rho); });
      }
      record(1, name, [&] { return verify_lclass_gens(s, vopts); });
      if (s.size() <= opts.schutz_limit) {
        for (Elem a = 0; a < s.size(); ++a) {
          record(3, name, [&] { return verify_schutz_gens(s, a, vopts); });
        }
      }
      for (auto const& tau : congs) {
        if (!is_two_sided_congruence(s, tau)) {
          continue;
        }
        auto const t = quotient_semigroup(s, tau);
        for (auto const& rho :
             sweep_congruences(t, opts.exhaustive_limit, opts.samples)) {
          record(4, name, [&] {
            return verify_quotient_gens(s, tau.class_of(), t, rho, vopts);
          });
        }
      }

      // S itself and the principal ideals that have an identity
      std::vector<std::vector<Elem>> ideals;
      for (std::size_t k = 0; k <= s.size(); ++k) {
        std::vector<Elem> members;
        if (k == s.size()) {
          for (Elem x = 0; x < s.size(); ++x) {
            members.push_back(x);
          }
        } else {
          ElementSet in(s.size());
          in.insert(Elem(k));
          for (Elem u = 0; u < s.size(); ++u) {
            in.insert(s.mul(u, Elem(k)));
            in.insert(s.mul(Elem(k), u));
            for (Elem v = 0; v < s.size(); ++v) {
              in.insert(s.mul(s.mul(u, Elem(k)), v));
            }
          }
          members = in.members();
        }
        if (std::find(ideals.begin(), ideals.end(), members) == ideals.end()) {
          ideals.push_back(std::move(members));
        }
      }
      for (auto const& members : ideals) {
        auto e = std::find_if(members.begin(), members.end(), [&](Elem c) {
          return std::all_of(members.begin(), members.end(), [&](Elem x) {
            return s.mul(c, x) == x && s.mul(x, c) == x;
          });
        });
        if (e == members.end()) {
          continue;
        }
        auto const local = restrict_to(s, members);
        for (auto const& rho :
             sweep_congruences(local, opts.exhaustive_limit, opts.samples)) {
          record(5, name, [&] {
            return verify_ideal_gens(s, members, *e, rho, vopts);
          });
        }
      }

      for (auto const& rho : congs) {
        for (auto const& sigma : congs) {
          if (rho.refines(sigma)) {
            record(6, name, [&] {
              return verify_extend_gens(s, rho, sigma, vopts);
            });
          }
        }
      }
      record(7, name, [&] { return verify_diagonal(s); });
    }

    for (auto const& [m_name, m] : small_monoids()) {
      for (auto const& [n_name, n] : small_monoids()) {
        if (m.size() > opts.dp_limit || n.size() > opts.dp_limit) {
          continue;
        }
        auto const product = direct_product(m, n);
        for (auto const& rho : enumerate_right_congruences(product).congruences) {
          record(2, m_name + "x" + n_name, [&] {
            return verify_dp_gens(m, n, rho, vopts);
          });
        }
      }
    }
    return result;
  }

}  // namespace sgt
