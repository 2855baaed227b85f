#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace interdict {

// Growable bit set used as an edge/arc/vertex filter. Indices past the end
// read as unset, so a default-constructed BitSet means "nothing selected".
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1U);
  }
  void set(std::size_t i) {
    grow(i + 1);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) noexcept {
    if (i < size_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }

  BitSet& operator|=(const BitSet& other);
  BitSet& operator&=(const BitSet& other);

  std::vector<int> indices() const;

  friend bool operator==(const BitSet& a, const BitSet& b);

 private:
  void grow(std::size_t size);

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

BitSet bitset_of(std::size_t size, const std::vector<int>& indices);

}  // namespace interdict
