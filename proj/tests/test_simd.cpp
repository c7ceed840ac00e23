#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "sgt/library.hpp"
#include "sgt/semigroup.hpp"
#include "sgt/simd.hpp"

using namespace sgt;
using simd::Isa;
using simd::ScopedIsa;

namespace {

  std::vector<Isa> available() {
    std::vector<Isa> out{Isa::scalar};
    if (simd::supported(Isa::avx2)) {
      out.push_back(Isa::avx2);
    }
    return out;
  }

  std::optional<std::array<Elem, 3>> naive_violation(std::vector<Elem> const& t,
                                                     std::size_t              n) {
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        for (Elem k = 0; k < n; ++k) {
          if (t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]]) {
            return std::array<Elem, 3>{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace

TEST_CASE("scalar kernels are always available", "[simd]") {
  REQUIRE(simd::supported(Isa::scalar));
  ScopedIsa pin(Isa::scalar);
  REQUIRE(simd::active() == Isa::scalar);
}

TEST_CASE("associativity scan agrees with the definition", "[simd]") {
  std::mt19937 rng(17);
  for (std::size_t n : {1u, 2u, 3u, 7u, 8u, 9u, 17u}) {
    std::uniform_int_distribution<Elem> pick(0, Elem(n - 1));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Elem> table(n * n);
      for (auto& x : table) {
        x = pick(rng);
      }
      auto const expected = naive_violation(table, n);
      for (auto isa : available()) {
        ScopedIsa pin(isa);
        CAPTURE(n, trial, simd::to_string(isa));
        REQUIRE(simd::find_associativity_violation(table, n) == expected);
      }
    }
  }
}

TEST_CASE("associativity scan accepts genuine semigroups", "[simd]") {
  for (auto const& entry : library()) {
    auto const t = entry.semigroup.table();
    for (auto isa : available()) {
      ScopedIsa pin(isa);
      CAPTURE(entry.name, simd::to_string(isa));
      REQUIRE_FALSE(simd::find_associativity_violation(t, entry.semigroup.size()));
    }
  }
}

TEST_CASE("a single corrupted entry is found at the same triple", "[simd]") {
  auto const        s = *library_semigroup("T3");
  std::vector<Elem> table(s.table().begin(), s.table().end());
  std::size_t const n = s.size();
  table[5 * n + 11]   = Elem((table[5 * n + 11] + 1) % n);
  auto const expected = naive_violation(table, n);
  REQUIRE(expected);
  for (auto isa : available()) {
    ScopedIsa pin(isa);
    REQUIRE(simd::find_associativity_violation(table, n) == expected);
  }
}

TEST_CASE("gather matches indexing", "[simd]") {
  std::mt19937 rng(3);
  for (std::size_t len : {0u, 1u, 5u, 8u, 13u, 64u, 100u}) {
    std::vector<Elem> base(37), index(len);
    for (auto& x : base) {
      x = Elem(rng());
    }
    for (auto& x : index) {
      x = Elem(rng() % base.size());
    }
    std::vector<Elem> expected(len);
    for (std::size_t k = 0; k < len; ++k) {
      expected[k] = base[index[k]];
    }
    for (auto isa : available()) {
      ScopedIsa         pin(isa);
      std::vector<Elem> out(len, kOne);
      simd::gather(base, index, out);
      REQUIRE(out == expected);
    }
  }
}

TEST_CASE("bitset kernels match word-wise reference", "[simd]") {
  std::mt19937_64 rng(11);
  for (std::size_t words : {0u, 1u, 3u, 4u, 5u, 9u}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint64_t> a(words), b(words);
      for (std::size_t k = 0; k < words; ++k) {
        a[k] = rng() & rng();
        b[k] = trial % 3 == 0 ? (a[k] | rng()) : rng();
      }
      std::vector<std::uint64_t> or_expected(words);
      bool                       equal = true, subset = true;
      std::size_t                count = 0;
      for (std::size_t k = 0; k < words; ++k) {
        or_expected[k] = a[k] | b[k];
        equal          = equal && a[k] == b[k];
        subset         = subset && (a[k] & ~b[k]) == 0;
        count += std::size_t(__builtin_popcountll(a[k]));
      }
      for (auto isa : available()) {
        ScopedIsa pin(isa);
        auto      dst = a;
        simd::bitset_or(dst, b);
        REQUIRE(dst == or_expected);
        REQUIRE(simd::bitset_equal(a, b) == equal);
        REQUIRE(simd::bitset_equal(a, a));
        REQUIRE(simd::bitset_subset(a, b) == subset);
        REQUIRE(simd::bitset_count(a) == count);
      }
    }
  }
}

TEST_CASE("library algorithms give identical results under each variant",
          "[simd]") {
  for (auto const& name : {"T3", "S3", "B2", "Z2xchain2"}) {
    auto const s = *library_semigroup(name);
    std::vector<Properties> seen;
    for (auto isa : available()) {
      ScopedIsa pin(isa);
      seen.push_back(classify(s));
    }
    for (auto const& p : seen) {
      REQUIRE(p == seen.front());
    }
  }
}
