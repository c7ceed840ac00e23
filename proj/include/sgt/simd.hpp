// Data-parallel inner loops used by the semigroup algorithms.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is picked at runtime from the CPU's capabilities; tests
// pin the choice with ScopedIsa to check that both produce identical results.

#ifndef SGT_SIMD_HPP_
#define SGT_SIMD_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "sgt/types.hpp"

namespace sgt::simd {

  enum class Isa { scalar, avx2 };

  std::string_view to_string(Isa isa) noexcept;

  // Whether this build and this CPU can run the given variant.
  bool supported(Isa isa) noexcept;

  // Best variant available on this machine.
  Isa detected() noexcept;

  Isa active() noexcept;

  // Selects a variant for subsequent kernel calls; unsupported requests fall
  // back to scalar. Returns the variant actually installed.
  Isa set_active(Isa isa) noexcept;

  class ScopedIsa {
   public:
    explicit ScopedIsa(Isa isa) : _previous(active()) {
      set_active(isa);
    }
    ScopedIsa(ScopedIsa const&)            = delete;
    ScopedIsa& operator=(ScopedIsa const&) = delete;
    ~ScopedIsa() {
      set_active(_previous);
    }

   private:
    Isa _previous;
  };

  // First triple (i, j, k) in lexicographic order with
  // table[table[i][j]][k] != table[i][table[j][k]], for a row-major n x n
  // table whose entries are all < n.
  std::optional<std::array<Elem, 3>>
  find_associativity_violation(std::span<Elem const> table, std::size_t n);

  // out[k] = base[index[k]]; every index must be < base.size().
  void gather(std::span<Elem const> base,
              std::span<Elem const> index,
              std::span<Elem>       out);

  // dst |= src, word by word.
  void bitset_or(std::span<std::uint64_t> dst,
                 std::span<std::uint64_t const> src);

  bool bitset_equal(std::span<std::uint64_t const> a,
                    std::span<std::uint64_t const> b);

  // Whether every bit of a is also set in b.
  bool bitset_subset(std::span<std::uint64_t const> a,
                     std::span<std::uint64_t const> b);

  std::size_t bitset_count(std::span<std::uint64_t const> a);

}  // namespace sgt::simd

#endif  // SGT_SIMD_HPP_
