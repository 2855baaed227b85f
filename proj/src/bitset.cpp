#include "interdict/bitset.hpp"

#include <algorithm>

namespace interdict {

void BitSet::grow(std::size_t size) {
  if (size <= size_) return;
  size_ = size;
  words_.resize((size + 63) / 64, 0);
}

BitSet& BitSet::operator|=(const BitSet& other) {
  grow(other.size_);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

std::vector<int> BitSet::indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(bit)));
      word &= word - 1;
    }
  }
  return out;
}

bool operator==(const BitSet& a, const BitSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    if (wa != wb) return false;
  }
  return true;
}

BitSet bitset_of(std::size_t size, const std::vector<int>& indices) {
  BitSet bits(size);
  for (int i : indices) bits.set(static_cast<std::size_t>(i));
  return bits;
}

}  // namespace interdict
