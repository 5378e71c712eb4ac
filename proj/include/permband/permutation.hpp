#pragma once

// Permutations of {1..n} in one-line notation, transpositions, and cycle
// decompositions.
//
// Composition convention: compose(p, q)(x) = p(q(x)), i.e. the RIGHT factor is
// applied first. A factor list [t1, t2, ..., tk] therefore denotes the product
// t1 * t2 * ... * tk with tk acting first, and "t * s" (left multiplication)
// permutes the VALUES of s while "s * t" permutes its POSITIONS.
//
// All external I/O is 1-based. Values are stored 1-based as well; only the
// container index is 0-based and that never leaves this type.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permband {

struct Transposition {
  int i = 1;
  int j = 2;

  // Normalizes the order so that i < j. Throws InvalidArgument if a == b or
  // either is < 1.
  static Transposition make(int a, int b);

  int width() const noexcept { return j - i; }
  int apply(int x) const noexcept { return x == i ? j : (x == j ? i : x); }

  auto operator<=>(const Transposition&) const = default;
};

class Permutation {
 public:
  static Permutation identity(int n);
  // Validates bijectivity on {1..n}; throws InvalidArgument naming the
  // first duplicated / out-of-range value.
  static Permutation from_one_line(std::vector<int> image);
  static Permutation from_transposition(int n, Transposition t);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  // sigma(x), 1-based.
  int operator()(int x) const { return image_[static_cast<std::size_t>(x - 1)]; }
  std::span<const int> one_line() const noexcept { return image_; }
  bool is_identity() const noexcept;

  // Lexicographic on one-line notation (degrees compared first).
  std::strong_ordering operator<=>(const Permutation& other) const;
  bool operator==(const Permutation& other) const = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

struct CycleDecomposition {
  int degree = 0;
  // Normal form: each cycle starts at its smallest element; cycles sorted by
  // that element; fixed points present as 1-cycles.
  std::vector<std::vector<int>> cycles;

  int count() const noexcept { return static_cast<int>(cycles.size()); }
};

enum class Parity { even, odd };

Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);

// t * p (swap the values t.i and t.j in p's one-line notation).
Permutation left_multiply(Transposition t, const Permutation& p);
// p * t (swap positions t.i and t.j).
Permutation right_multiply(const Permutation& p, Transposition t);

CycleDecomposition cycle_decomposition(const Permutation& p);
// Builds the permutation whose disjoint cycles are `cycles` (missing points
// are fixed). Throws InvalidArgument on overlap or out-of-range entries.
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
// Rotates a cycle so it starts at its smallest element.
std::vector<int> normalize_cycle(std::vector<int> cycle);

// Number of pairs a < b with p(a) > p(b). O(n log n).
std::uint64_t inversion_count(const Permutation& p);
Parity parity(const Permutation& p);

// Product t[0] * t[1] * ... * t[k-1] in S_n.
Permutation product(int n, std::span<const Transposition> factors);

// Text codecs. One-line accepts "3 2 4 5 1" and "[3,2,4,5,1]"; cycle notation
// is auto-detected by a leading '(' and accepts "(1 7)(2 3 4 5 6)" or
// "(1,9,2)(3,4)". For cycle text the degree is `n` when given (> 0), otherwise
// the largest element mentioned. "()" is the identity.
Permutation parse_permutation(std::string_view text, int n = 0);
std::string format_one_line(const Permutation& p);
// Cycle notation without 1-cycles; the identity prints as "()".
std::string format_cycles(const Permutation& p);
std::string format_cycle(std::span<const int> cycle);
std::string format_transposition(Transposition t);

}  // namespace permband
