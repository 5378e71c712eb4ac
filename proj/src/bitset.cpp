#include "permband/bitset.hpp"

namespace permband {

std::uint64_t Bitset::count() const noexcept {
  std::uint64_t c = 0;
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

}  // namespace permband
