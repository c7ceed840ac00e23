// Fixed-universe bitset over the elements of a semigroup.

#ifndef SGT_ELEMENT_SET_HPP_
#define SGT_ELEMENT_SET_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "sgt/types.hpp"

namespace sgt {

  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : _universe(universe), _words((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept {
      return _universe;
    }

    bool contains(Elem x) const noexcept {
      return (_words[x >> 6] >> (x & 63)) & 1u;
    }

    void insert(Elem x) noexcept {
      _words[x >> 6] |= std::uint64_t(1) << (x & 63);
    }

    void erase(Elem x) noexcept {
      _words[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
    }

    void insert_all(ElementSet const& other);
    std::size_t count() const;
    bool empty() const;
    bool is_subset_of(ElementSet const& other) const;

    // Members in increasing order.
    std::vector<Elem> members() const;

    bool operator==(ElementSet const& other) const;

    std::vector<std::uint64_t> const& words() const noexcept {
      return _words;
    }

   private:
    std::size_t                _universe = 0;
    std::vector<std::uint64_t> _words;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      std::size_t h = s.universe();
      for (auto w : s.words()) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }
  };

}  // namespace sgt

#endif  // SGT_ELEMENT_SET_HPP_
