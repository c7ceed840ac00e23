// Per-ISA kernel tables. Each variant lives in its own translation unit so
// that only avx2.cpp is compiled with -mavx2.

#ifndef SGT_SRC_SIMD_KERNELS_HPP_
#define SGT_SRC_SIMD_KERNELS_HPP_

#include "sgt/simd.hpp"

namespace sgt::simd::detail {

  struct KernelTable {
    std::optional<std::array<Elem, 3>> (*find_associativity_violation)(
        std::span<Elem const>,
        std::size_t);
    void (*gather)(std::span<Elem const>, std::span<Elem const>, std::span<Elem>);
    void (*bitset_or)(std::span<std::uint64_t>, std::span<std::uint64_t const>);
    bool (*bitset_equal)(std::span<std::uint64_t const>,
                         std::span<std::uint64_t const>);
    bool (*bitset_subset)(std::span<std::uint64_t const>,
                          std::span<std::uint64_t const>);
    std::size_t (*bitset_count)(std::span<std::uint64_t const>);
  };

  KernelTable const& scalar_kernels() noexcept;

#ifdef SGT_HAVE_AVX2
  KernelTable const& avx2_kernels() noexcept;
#endif

}  // namespace sgt::simd::detail

#endif  // SGT_SRC_SIMD_KERNELS_HPP_
