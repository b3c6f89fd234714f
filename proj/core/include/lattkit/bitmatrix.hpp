#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace lattkit {

// Dense square 0/1 matrix, row-major, 64 bits per word.  Rows double as
// subsets of 0..n-1, which is how all the order-theoretic scans below use
// them (a row of `leq` is an up-set, a row of the transpose a down-set).
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words_per_row() const { return words_; }

  bool get(int i, int j) const {
    return (bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] >>
            (static_cast<unsigned>(j) % 64)) & 1u;
  }
  void set(int i, int j) {
    bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] |=
        std::uint64_t{1} << (static_cast<unsigned>(j) % 64);
  }
  void reset(int i, int j) {
    bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] &=
        ~(std::uint64_t{1} << (static_cast<unsigned>(j) % 64));
  }

  std::span<const std::uint64_t> row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }
  std::span<std::uint64_t> row(int i) {
    return {bits_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (get(i, j)) t.set(j, i);
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace bits {

inline bool subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

inline int popcount(std::span<const std::uint64_t> a) {
  int c = 0;
  for (std::uint64_t w : a) c += std::popcount(w);
  return c;
}

// Calls fn(index) for every set bit.
template <typename Fn>
void for_each(std::span<const std::uint64_t> a, Fn&& fn) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::uint64_t w = a[k];
    while (w) {
      int b = std::countr_zero(w);
      fn(static_cast<int>(k * 64) + b);
      w &= w - 1;
    }
  }
}

}  // namespace bits
}  // namespace lattkit
