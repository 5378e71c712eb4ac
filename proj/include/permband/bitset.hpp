#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace permband {

// Fixed-size bit array indexed by permutation rank. One bit per state.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint64_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::uint64_t size() const noexcept { return bits_; }
  std::size_t word_count() const noexcept { return words_.size(); }

  bool test(std::uint64_t k) const noexcept { return (words_[k >> 6] >> (k & 63)) & 1u; }
  void set(std::uint64_t k) noexcept { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::uint64_t word(std::size_t w) const noexcept { return words_[w]; }
  std::uint64_t& word(std::size_t w) noexcept { return words_[w]; }
  std::uint64_t* data() noexcept { return words_.data(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }

  // Bits of word w that lie inside [0, size()).
  std::uint64_t valid_mask(std::size_t w) const noexcept {
    const std::uint64_t tail = bits_ - static_cast<std::uint64_t>(w) * 64;
    return tail >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << tail) - 1);
  }

  std::uint64_t count() const noexcept;

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
        f(static_cast<std::uint64_t>(w) * 64 + static_cast<unsigned>(std::countr_zero(bits)));
      }
    }
  }

  bool operator==(const Bitset&) const = default;

 private:
  std::uint64_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace permband
