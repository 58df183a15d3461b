#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rigclique {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

namespace bits {

inline bool test(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }

inline void reset(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

/// |a & b| without materializing the intersection.
inline std::size_t and_count(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// True iff every bit of `sub` is also set in `super`.
inline bool is_subset(std::span<const Word> sub, std::span<const Word> super) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i] & ~super[i]) return false;
  return true;
}

template <typename F>
void for_each_set(std::span<const Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word word = row[w];
    while (word) {
      const auto b = static_cast<std::size_t>(std::countr_zero(word));
      f(w * kWordBits + b);
      word &= word - 1;
    }
  }
}

}  // namespace bits

/// Fixed-capacity owning bit set.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t nbits) : nbits_(nbits), words_(words_for(nbits), 0) {}

  std::size_t capacity() const noexcept { return nbits_; }
  bool test(std::size_t i) const { return bits::test(words_, i); }
  void set(std::size_t i) { bits::set(words_, i); }
  void reset(std::size_t i) { bits::reset(words_, i); }
  std::size_t count() const { return bits::count(words_); }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  BitSet& operator&=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
    return *this;
  }
  BitSet& operator|=(std::span<const Word> other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other[i];
    return *this;
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }
  operator std::span<const Word>() const noexcept { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    bits::for_each_set(words_, std::forward<F>(f));
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

}  // namespace rigclique
