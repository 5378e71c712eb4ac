#include "permband/permutation.hpp"

#include <algorithm>
#include <string>

#include "permband/error.hpp"

namespace permband {

Transposition Transposition::make(int a, int b) {
  if (a < 1 || b < 1) {
    throw InvalidArgument("transposition entries must be >= 1, got (" + std::to_string(a) +
                          "," + std::to_string(b) + ")");
  }
  if (a == b) throw InvalidArgument("transposition needs two distinct points, got (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
  return a < b ? Transposition{a, b} : Transposition{b, a};
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("degree must be >= 1, got " + std::to_string(n));
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) image[static_cast<std::size_t>(k)] = k + 1;
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  if (n < 1) throw InvalidArgument("permutation must have degree >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : image) {
    if (v < 1 || v > n) {
      throw InvalidArgument("value " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("duplicate value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_transposition(int n, Transposition t) {
  if (t.j > n) {
    throw InvalidArgument("transposition " + format_transposition(t) + " outside degree " +
                          std::to_string(n));
  }
  Permutation p = identity(n);
  std::swap(p.image_[static_cast<std::size_t>(t.i - 1)], p.image_[static_cast<std::size_t>(t.j - 1)]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(image_.begin(), image_.end(),
                                                other.image_.begin(), other.image_.end());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("degree mismatch in compose: " + std::to_string(p.degree()) +
                          " vs " + std::to_string(q.degree()));
  }
  std::vector<int> image(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) image[static_cast<std::size_t>(x - 1)] = p(q(x));
  return Permutation::from_one_line(std::move(image));
}

Permutation invert(const Permutation& p) {
  std::vector<int> image(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) image[static_cast<std::size_t>(p(x) - 1)] = x;
  return Permutation::from_one_line(std::move(image));
}

Permutation left_multiply(Transposition t, const Permutation& p) {
  if (t.j > p.degree()) throw InvalidArgument("transposition outside degree");
  std::vector<int> image(p.one_line().begin(), p.one_line().end());
  for (int& v : image) v = t.apply(v);
  return Permutation::from_one_line(std::move(image));
}

Permutation right_multiply(const Permutation& p, Transposition t) {
  if (t.j > p.degree()) throw InvalidArgument("transposition outside degree");
  std::vector<int> image(p.one_line().begin(), p.one_line().end());
  std::swap(image[static_cast<std::size_t>(t.i - 1)], image[static_cast<std::size_t>(t.j - 1)]);
  return Permutation::from_one_line(std::move(image));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  out.degree = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(p.degree()) + 1, 0);
  // Scanning x upward makes every cycle start at its smallest element and
  // emits cycles sorted by that element.
  for (int x = 1; x <= p.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::vector<int> cycle;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
      seen[static_cast<std::size_t>(y)] = 1;
      cycle.push_back(y);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) image[static_cast<std::size_t>(k)] = k + 1;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int x = c[k];
      if (x < 1 || x > n) {
        throw InvalidArgument("cycle entry " + std::to_string(x) + " out of range 1.." +
                              std::to_string(n));
      }
      if (used[static_cast<std::size_t>(x)]) {
        throw InvalidArgument("entry " + std::to_string(x) + " appears in more than one cycle position");
      }
      used[static_cast<std::size_t>(x)] = 1;
      image[static_cast<std::size_t>(x - 1)] = c[(k + 1) % c.size()];
    }
  }
  return Permutation::from_one_line(std::move(image));
}

std::vector<int> normalize_cycle(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

namespace {

// Fenwick tree over values 1..n.
class Fenwick {
 public:
  explicit Fenwick(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}
  void add(int x) {
    for (; x < static_cast<int>(tree_.size()); x += x & -x) ++tree_[static_cast<std::size_t>(x)];
  }
  std::uint64_t prefix(int x) const {
    std::uint64_t s = 0;
    for (; x > 0; x -= x & -x) s += tree_[static_cast<std::size_t>(x)];
    return s;
  }

 private:
  std::vector<std::uint32_t> tree_;
};

}  // namespace

std::uint64_t inversion_count(const Permutation& p) {
  // Scan right to left; for each value count the smaller values already seen.
  Fenwick seen(p.degree());
  std::uint64_t total = 0;
  for (int pos = p.degree(); pos >= 1; --pos) {
    total += seen.prefix(p(pos) - 1);
    seen.add(p(pos));
  }
  return total;
}

Parity parity(const Permutation& p) {
  const int r = cycle_decomposition(p).count();
  return ((p.degree() - r) % 2 == 0) ? Parity::even : Parity::odd;
}

Permutation product(int n, std::span<const Transposition> factors) {
  // Apply the rightmost factor first: x -> t[k-1](x) -> ... -> t[0](...).
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    int y = x;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (it->i < 1 || it->j > n || it->i >= it->j) {
        throw InvalidArgument("factor " + format_transposition(*it) + " invalid in degree " +
                              std::to_string(n));
      }
      y = it->apply(y);
    }
    image[static_cast<std::size_t>(x - 1)] = y;
  }
  return Permutation::from_one_line(std::move(image));
}

}  // namespace permband
