#include "permband/rank.hpp"

#include <array>
#include <vector>

#include "permband/error.hpp"

namespace permband {

namespace {

constexpr int kMaskBits = RankCodec::kMaxDegree;

// select[mask * kMaskBits + k] = position of the k-th set bit of mask.
const std::vector<std::uint8_t>& select_table() {
  static const std::vector<std::uint8_t> table = [] {
    std::vector<std::uint8_t> t(static_cast<std::size_t>(1u << kMaskBits) * kMaskBits, 0);
    for (std::uint32_t mask = 0; mask < (1u << kMaskBits); ++mask) {
      int k = 0;
      for (int bit = 0; bit < kMaskBits; ++bit) {
        if (mask & (1u << bit)) t[mask * kMaskBits + static_cast<std::uint32_t>(k++)] = static_cast<std::uint8_t>(bit);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

RankCodec::RankCodec(int n) : n_(n), size_(factorial(n)) {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidArgument("rank codec supports degree 1.." + std::to_string(kMaxDegree) +
                          ", got " + std::to_string(n));
  }
  (void)select_table();
}

void RankCodec::unrank(std::uint64_t k, std::span<std::uint8_t> out) const noexcept {
  std::array<std::uint8_t, kMaxDegree> digit{};
  for (int pos = n_ - 1; pos >= 0; --pos) {
    const auto radix = static_cast<std::uint64_t>(n_ - pos);
    digit[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(k % radix);
    k /= radix;
  }
  const auto& sel = select_table();
  std::uint32_t avail = (1u << n_) - 1u;
  for (int pos = 0; pos < n_; ++pos) {
    const std::uint8_t v = sel[avail * kMaskBits + digit[static_cast<std::size_t>(pos)]];
    out[static_cast<std::size_t>(pos)] = v;
    avail &= ~(1u << v);
  }
}

std::uint64_t RankCodec::rank(const Permutation& p) const {
  if (p.degree() != n_) {
    throw InvalidArgument("rank: degree " + std::to_string(p.degree()) + " does not match codec degree " +
                          std::to_string(n_));
  }
  std::array<std::uint8_t, kMaxDegree> v{};
  for (int x = 1; x <= n_; ++x) v[static_cast<std::size_t>(x - 1)] = static_cast<std::uint8_t>(p(x) - 1);
  return rank(std::span<const std::uint8_t>(v.data(), static_cast<std::size_t>(n_)));
}

Permutation RankCodec::unrank(std::uint64_t k) const {
  if (k >= size_) {
    throw InvalidArgument("rank " + std::to_string(k) + " out of range 0.." + std::to_string(size_ - 1));
  }
  std::array<std::uint8_t, kMaxDegree> v{};
  unrank(k, std::span<std::uint8_t>(v.data(), static_cast<std::size_t>(n_)));
  std::vector<int> image(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) image[static_cast<std::size_t>(x)] = v[static_cast<std::size_t>(x)] + 1;
  return Permutation::from_one_line(std::move(image));
}

}  // namespace permband
