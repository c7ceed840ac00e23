#include <atomic>

#include "simd/kernels.hpp"

namespace sgt::simd {

  namespace {

    bool cpu_has_avx2() noexcept {
#if defined(SGT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    }

    detail::KernelTable const* table_for(Isa isa) noexcept {
#ifdef SGT_HAVE_AVX2
      if (isa == Isa::avx2) {
        return &detail::avx2_kernels();
      }
#else
      (void) isa;
#endif
      return &detail::scalar_kernels();
    }

    std::atomic<Isa>& current() noexcept {
      static std::atomic<Isa> isa{detected()};
      return isa;
    }

    detail::KernelTable const& kernels() noexcept {
      return *table_for(current().load(std::memory_order_relaxed));
    }

  }  // namespace

  std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
      case Isa::avx2:
        return "avx2";
      case Isa::scalar:
        break;
    }
    return "scalar";
  }

  bool supported(Isa isa) noexcept {
    return isa == Isa::scalar || cpu_has_avx2();
  }

  Isa detected() noexcept {
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  }

  Isa active() noexcept {
    return current().load(std::memory_order_relaxed);
  }

  Isa set_active(Isa isa) noexcept {
    if (!supported(isa)) {
      isa = Isa::scalar;
    }
    current().store(isa, std::memory_order_relaxed);
    return isa;
  }

  std::optional<std::array<Elem, 3>>
  find_associativity_violation(std::span<Elem const> table, std::size_t n) {
    return kernels().find_associativity_violation(table, n);
  }

  void gather(std::span<Elem const> base,
              std::span<Elem const> index,
              std::span<Elem>       out) {
    kernels().gather(base, index, out);
  }

  void bitset_or(std::span<std::uint64_t>       dst,
                 std::span<std::uint64_t const> src) {
    kernels().bitset_or(dst, src);
  }

  bool bitset_equal(std::span<std::uint64_t const> a,
                    std::span<std::uint64_t const> b) {
    return kernels().bitset_equal(a, b);
  }

  bool bitset_subset(std::span<std::uint64_t const> a,
                     std::span<std::uint64_t const> b) {
    return kernels().bitset_subset(a, b);
  }

  std::size_t bitset_count(std::span<std::uint64_t const> a) {
    return kernels().bitset_count(a);
  }

}  // namespace sgt::simd
