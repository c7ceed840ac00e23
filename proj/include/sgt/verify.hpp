// Replays of the generating-set constructions for right congruences on
// concrete finite semigroups. Each verify_* call builds the set prescribed by
// the construction and checks that it generates what it should.

#ifndef SGT_VERIFY_HPP_
#define SGT_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sgt/congruence.hpp"
#include "sgt/semigroup.hpp"

namespace sgt {

  struct VerificationReport {
    std::string construction;
    std::string inputs_summary;
    // Built pair set (congruence constructions) or built element set
    // (generating-set constructions).
    PairSet           pairs;
    std::vector<Elem> generators;

    std::optional<RightCongruence> expected;
    std::optional<RightCongruence> computed;
    // Generating-set constructions: size of the generated set and the target.
    std::size_t generated_size = 0;
    std::size_t target_size    = 0;

    bool pass = false;
    // First pair related in exactly one of expected/computed.
    std::optional<Pair> witness;
    // Generating-set constructions: first element not generated.
    std::optional<Elem> missing;
  };

  struct VerifyOptions {
    // Use every within-class pair in place of minimal_generating_pairs.
    bool use_full_pairs = false;
  };

  // rho generated by {(x, a_i) : x in X n C_i} u {(a_i x, a_j) : C_i x in C_j}
  // with a_i the smallest member of C_i. X must generate S (NotGenerating).
  VerificationReport verify_fg_gens(FiniteSemigroup const&   s,
                                    std::vector<Elem> const& x,
                                    RightCongruence const&   rho);

  // S generated by {alpha(x, y) : (x, y) in X-bar} u {b_i}, where x =
  // alpha(x, y) y and b_i is the smallest member of each L-class. X must
  // generate L (PreconditionFailed). Without X, minimal generating pairs of L
  // are used.
  VerificationReport verify_lclass_gens(FiniteSemigroup const& s,
                                        PairSet const&         x,
                                        VerifyOptions          opts = {});
  VerificationReport verify_lclass_gens(FiniteSemigroup const& s,
                                        VerifyOptions          opts = {});

  // rho on direct_product(m, n) generated by Z = H u Y u (union of Y_j).
  VerificationReport verify_dp_gens(FiniteSemigroup const& m,
                                    FiniteSemigroup const& n,
                                    RightCongruence const& rho,
                                    VerifyOptions          opts = {});

  // Gamma(H) generated by the sigma-classes of the alpha(x, y).
  VerificationReport verify_schutz_gens(FiniteSemigroup const& s,
                                        Elem                   element,
                                        VerifyOptions          opts = {});

  // rho on T generated by the image pairs of generators of its pullback.
  // theta[x] is the image of x in T.
  VerificationReport verify_quotient_gens(FiniteSemigroup const&   s,
                                          std::vector<Elem> const& theta,
                                          FiniteSemigroup const&   t,
                                          RightCongruence const&   rho,
                                          VerifyOptions            opts = {});

  // rho on the ideal I (classes over positions in the sorted member list)
  // generated by {(ex, ey)} from generators of s rho' t iff es rho et.
  VerificationReport verify_ideal_gens(FiniteSemigroup const&   s,
                                       std::vector<Elem> const& ideal,
                                       Elem                     e,
                                       RightCongruence const&   rho,
                                       VerifyOptions            opts = {});

  // sigma generated by X u {(a_i, a_j) : i != j, a_i sigma a_j}, X generating
  // rho and a_i the smallest member of each rho-class.
  VerificationReport verify_extend_gens(FiniteSemigroup const& s,
                                        RightCongruence const& rho,
                                        RightCongruence const& sigma,
                                        VerifyOptions          opts = {});

  // No pair generates the diagonal act when |S| >= 2; (0, 0) does when S is
  // trivial.
  VerificationReport verify_diagonal(FiniteSemigroup const& s);

  // First isomorphism S -> T found by backtracking, as an element map.
  // Throws SizeLimitExceeded when |S| > size_limit.
  std::optional<std::vector<Elem>> isomorphic(FiniteSemigroup const& s,
                                              FiniteSemigroup const& t,
                                              std::size_t size_limit = 8);

  struct SweepOptions {
    // Semigroups up to this size use every right congruence; larger ones use
    // sampled congruences.
    std::size_t exhaustive_limit = 5;
    std::size_t samples          = 50;
    // Skip library semigroups larger than this.
    std::size_t max_size = 64;
    // Schutzenberger generators for every element up to this size.
    std::size_t schutz_limit = 6;
    // Direct products of monoids up to this order.
    std::size_t dp_limit  = 3;
    bool        use_full_pairs = false;
  };

  struct SweepRow {
    std::string construction;
    std::size_t runs     = 0;
    std::size_t failures = 0;
  };

  struct SweepResult {
    std::vector<SweepRow>           rows;
    std::vector<VerificationReport> failed;

    bool pass() const noexcept {
      return failed.empty();
    }
  };

  SweepResult run_sweep(SweepOptions const& opts = {});

  // Congruences used by the sweep for S: all of them when |S| is at most
  // exhaustive_limit, otherwise identity, universal and those generated by
  // pseudo-random pair sets (fixed seed), deduplicated, in canonical order.
  std::vector<RightCongruence> sweep_congruences(FiniteSemigroup const& s,
                                                 std::size_t exhaustive_limit,
                                                 std::size_t samples);

}  // namespace sgt

#endif  // SGT_VERIFY_HPP_
