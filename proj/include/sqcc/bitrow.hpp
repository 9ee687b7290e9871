#ifndef SQCC_BITROW_HPP
#define SQCC_BITROW_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sqcc {

/// Fixed-width bit row. All binary operations require equal widths.
///
/// This is the storage for graph neighbourhoods and color sets; the kernels
/// lean on word-level intersection and popcount without allocating.
class BitRow {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitRow() = default;
  explicit BitRow(std::size_t bits)
      : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return bits_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }
  void fill() noexcept {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (Word w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  std::size_t find_first() const noexcept { return find_from(0); }
  std::size_t find_next(std::size_t i) const noexcept { return find_from(i + 1); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  BitRow& operator&=(const BitRow& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitRow& operator|=(const BitRow& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitRow& subtract(const BitRow& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend BitRow operator&(BitRow a, const BitRow& b) noexcept { return a &= b; }
  friend BitRow operator|(BitRow a, const BitRow& b) noexcept { return a |= b; }
  friend bool operator==(const BitRow&, const BitRow&) = default;

  bool is_subset_of(const BitRow& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  friend std::size_t intersection_count(const BitRow& a, const BitRow& b) noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }
  friend bool intersects(const BitRow& a, const BitRow& b) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if ((a.words_[i] & b.words_[i]) != 0) return true;
    return false;
  }

 private:
  std::size_t find_from(std::size_t i) const noexcept {
    if (i >= bits_) return npos;
    std::size_t wi = i / kWordBits;
    Word w = words_[wi] & (~Word{0} << (i % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }
  void trim() noexcept {
    if (bits_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (bits_ % kWordBits)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace sqcc

#endif  // SQCC_BITROW_HPP
