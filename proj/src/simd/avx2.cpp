// AVX2 kernels. Compiled with -mavx2 -mpopcnt; only reached after the
// dispatcher has confirmed CPU support.

#include <immintrin.h>

#include "simd/kernels.hpp"

namespace sgt::simd::detail {

  namespace {

    inline __m256i load8(Elem const* p) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
    }

    std::optional<std::array<Elem, 3>>
    find_associativity_violation(std::span<Elem const> table, std::size_t n) {
      std::size_t const blocked = n - n % 8;
      for (std::size_t i = 0; i < n; ++i) {
        Elem const* row_i = table.data() + i * n;
        auto const* base  = reinterpret_cast<int const*>(row_i);
        for (std::size_t j = 0; j < n; ++j) {
          Elem const* row_j  = table.data() + j * n;
          Elem const* row_ij = table.data() + std::size_t(row_i[j]) * n;
          std::size_t k      = 0;
          for (; k < blocked; k += 8) {
            __m256i lhs = load8(row_ij + k);
            __m256i rhs = _mm256_i32gather_epi32(base, load8(row_j + k), 4);
            int     eq  = _mm256_movemask_epi8(_mm256_cmpeq_epi32(lhs, rhs));
            if (eq != -1) {
              break;
            }
          }
          for (; k < n; ++k) {
            if (row_ij[k] != row_i[row_j[k]]) {
              return std::array<Elem, 3>{Elem(i), Elem(j), Elem(k)};
            }
          }
        }
      }
      return std::nullopt;
    }

    void gather(std::span<Elem const> base,
                std::span<Elem const> index,
                std::span<Elem>       out) {
      std::size_t const m       = index.size();
      std::size_t const blocked = m - m % 8;
      auto const*       b       = reinterpret_cast<int const*>(base.data());
      std::size_t       k       = 0;
      for (; k < blocked; k += 8) {
        __m256i v = _mm256_i32gather_epi32(b, load8(index.data() + k), 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k), v);
      }
      for (; k < m; ++k) {
        out[k] = base[index[k]];
      }
    }

    inline __m256i load4(std::uint64_t const* p) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
    }

    void bitset_or(std::span<std::uint64_t>       dst,
                   std::span<std::uint64_t const> src) {
      std::size_t const m       = dst.size();
      std::size_t const blocked = m - m % 4;
      std::size_t       w       = 0;
      for (; w < blocked; w += 4) {
        __m256i v = _mm256_or_si256(load4(dst.data() + w), load4(src.data() + w));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + w), v);
      }
      for (; w < m; ++w) {
        dst[w] |= src[w];
      }
    }

    bool bitset_equal(std::span<std::uint64_t const> a,
                      std::span<std::uint64_t const> b) {
      std::size_t const m       = a.size();
      std::size_t const blocked = m - m % 4;
      std::size_t       w       = 0;
      for (; w < blocked; w += 4) {
        __m256i x = _mm256_xor_si256(load4(a.data() + w), load4(b.data() + w));
        if (!_mm256_testz_si256(x, x)) {
          return false;
        }
      }
      for (; w < m; ++w) {
        if (a[w] != b[w]) {
          return false;
        }
      }
      return true;
    }

    bool bitset_subset(std::span<std::uint64_t const> a,
                       std::span<std::uint64_t const> b) {
      std::size_t const m       = a.size();
      std::size_t const blocked = m - m % 4;
      std::size_t       w       = 0;
      for (; w < blocked; w += 4) {
        // testc(b, a) is set iff (~b & a) == 0
        if (!_mm256_testc_si256(load4(b.data() + w), load4(a.data() + w))) {
          return false;
        }
      }
      for (; w < m; ++w) {
        if ((a[w] & ~b[w]) != 0) {
          return false;
        }
      }
      return true;
    }

    std::size_t bitset_count(std::span<std::uint64_t const> a) {
      std::size_t total = 0;
      for (auto word : a) {
        total += static_cast<std::size_t>(_mm_popcnt_u64(word));
      }
      return total;
    }

  }  // namespace

  KernelTable const& avx2_kernels() noexcept {
    static constexpr KernelTable table{find_associativity_violation,
                                       gather,
                                       bitset_or,
                                       bitset_equal,
                                       bitset_subset,
                                       bitset_count};
    return table;
  }

}  // namespace sgt::simd::detail
