#include "sgt/element_set.hpp"

#include <bit>

#include "sgt/simd.hpp"

namespace sgt {

  void ElementSet::insert_all(ElementSet const& other) {
    simd::bitset_or(_words, other._words);
  }

  std::size_t ElementSet::count() const {
    return simd::bitset_count(_words);
  }

  bool ElementSet::empty() const {
    for (auto w : _words) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  bool ElementSet::is_subset_of(ElementSet const& other) const {
    return simd::bitset_subset(_words, other._words);
  }

  std::vector<Elem> ElementSet::members() const {
    std::vector<Elem> out;
    for (std::size_t w = 0; w < _words.size(); ++w) {
      auto word = _words[w];
      while (word != 0) {
        out.push_back(Elem(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  bool ElementSet::operator==(ElementSet const& other) const {
    return _universe == other._universe
           && simd::bitset_equal(_words, other._words);
  }

}  // namespace sgt
