#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace numsg {

/// Growable dense bit set indexed from 0. Out-of-range reads return false.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1u);
  }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void resize(std::size_t size) {
    words_.resize((size + 63) / 64, 0);
    if (size < size_) {
      // clear the stale tail so a later grow starts from zero bits
      if (size & 63) words_.back() &= (std::uint64_t{1} << (size & 63)) - 1;
    }
    size_ = size;
  }

  void push_back(bool bit) {
    if ((size_ & 63) == 0) words_.push_back(0);
    if (bit) set(size_);
    ++size_;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace numsg
