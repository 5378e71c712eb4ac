#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "permband/permutation.hpp"

namespace permband {

// Bijection between S_n and {0, ..., n!-1}: the Lehmer code read as a
// mixed-radix number, so ranks follow lexicographic order of one-line
// notation (rank 0 is the identity, n!-1 the reversal). Rank and unrank are
// O(n): popcount for rank, a select table for unrank.
class RankCodec {
 public:
  static constexpr std::string_view kScheme = "lehmer-lex/1";
  static constexpr int kMaxDegree = 16;

  explicit RankCodec(int n);

  int degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t rank(const Permutation& p) const;
  Permutation unrank(std::uint64_t k) const;

  // Hot-path forms over 0-based values (v[k] = sigma(k+1) - 1), length n.
  std::uint64_t rank(std::span<const std::uint8_t> v) const noexcept {
    std::uint32_t used = 0;
    std::uint64_t r = 0;
    for (int k = 0; k < n_; ++k) {
      const unsigned x = v[static_cast<std::size_t>(k)];
      const unsigned below = static_cast<unsigned>(__builtin_popcount(used & ((1u << x) - 1u)));
      r = r * static_cast<std::uint64_t>(n_ - k) + (x - below);
      used |= 1u << x;
    }
    return r;
  }
  void unrank(std::uint64_t k, std::span<std::uint8_t> out) const noexcept;

 private:
  int n_;
  std::uint64_t size_;
};

std::uint64_t factorial(int n);

}  // namespace permband
