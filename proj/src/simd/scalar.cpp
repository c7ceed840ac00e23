// Scalar reference kernels. These define the expected output of every other
// variant.

#include <bit>

#include "simd/kernels.hpp"

namespace sgt::simd::detail {

  namespace {

    std::optional<std::array<Elem, 3>>
    find_associativity_violation(std::span<Elem const> table, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        Elem const* row_i = table.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) {
          Elem const* row_j  = table.data() + j * n;
          Elem const* row_ij = table.data() + std::size_t(row_i[j]) * n;
          for (std::size_t k = 0; k < n; ++k) {
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
      for (std::size_t k = 0; k < index.size(); ++k) {
        out[k] = base[index[k]];
      }
    }

    void bitset_or(std::span<std::uint64_t>       dst,
                   std::span<std::uint64_t const> src) {
      for (std::size_t w = 0; w < dst.size(); ++w) {
        dst[w] |= src[w];
      }
    }

    bool bitset_equal(std::span<std::uint64_t const> a,
                      std::span<std::uint64_t const> b) {
      for (std::size_t w = 0; w < a.size(); ++w) {
        if (a[w] != b[w]) {
          return false;
        }
      }
      return true;
    }

    bool bitset_subset(std::span<std::uint64_t const> a,
                       std::span<std::uint64_t const> b) {
      for (std::size_t w = 0; w < a.size(); ++w) {
        if ((a[w] & ~b[w]) != 0) {
          return false;
        }
      }
      return true;
    }

    std::size_t bitset_count(std::span<std::uint64_t const> a) {
      std::size_t total = 0;
      for (auto word : a) {
        total += std::popcount(word);
      }
      return total;
    }

  }  // namespace

  KernelTable const& scalar_kernels() noexcept {
    static constexpr KernelTable table{find_associativity_violation,
                                       gather,
                                       bitset_or,
                                       bitset_equal,
                                       bitset_subset,
                                       bitset_count};
    return table;
  }

}  // namespace sgt::simd::detail
