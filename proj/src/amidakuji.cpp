#include "permband/amidakuji.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "permband/error.hpp"
#include "permband/factorize.hpp"

namespace permband {

int Ladder::rung_count() const noexcept {
  int total = 0;
  for (const auto& lv : levels) total += static_cast<int>(lv.size());
  return total;
}

std::optional<LadderViolation> validate(const Ladder& l) {
  if (l.n < 1) return LadderViolation{0, 0, "ladder needs at least one line, got n=" + std::to_string(l.n)};
  for (std::size_t k = 0; k < l.levels.size(); ++k) {
    const auto& lv = l.levels[k];
    const int level = static_cast<int>(k) + 1;
    for (std::size_t a = 0; a < lv.size(); ++a) {
      const int c = lv[a];
      if (c < 1 || c > l.n - 1) {
        return LadderViolation{level, c,
                               "level " + std::to_string(level) + ": column " + std::to_string(c) +
                                   " outside 1.." + std::to_string(l.n - 1)};
      }
      for (std::size_t b = 0; b < a; ++b) {
        if (std::abs(lv[b] - c) <= 1) {
          return LadderViolation{level, c,
                                 "level " + std::to_string(level) + ": rungs at columns " +
                                     std::to_string(lv[b]) + " and " + std::to_string(c) + " share a line"};
        }
      }
    }
  }
  return std::nullopt;
}

Permutation apply(const Ladder& l) {
  if (auto v = validate(l)) throw InvalidArgument("invalid ladder: " + v->message);
  // at[line] = person currently on that line.
  std::vector<int> at(static_cast<std::size_t>(l.n) + 1);
  for (int x = 1; x <= l.n; ++x) at[static_cast<std::size_t>(x)] = x;
  for (const auto& lv : l.levels) {
    for (int c : lv) std::swap(at[static_cast<std::size_t>(c)], at[static_cast<std::size_t>(c) + 1]);
  }
  std::vector<int> image(static_cast<std::size_t>(l.n));
  for (int line = 1; line <= l.n; ++line) image[static_cast<std::size_t>(at[static_cast<std::size_t>(line)] - 1)] = line;
  return Permutation::from_one_line(std::move(image));
}

Ladder synthesize(const Permutation& p) {
  const auto f = adjacent_sort(p);
  Ladder l{p.degree(), {}};
  // The last factor acts first, so it is the top rung.
  std::vector<int> height(static_cast<std::size_t>(p.degree()) + 1, 0);
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    const int c = it->i;
    int level = height[static_cast<std::size_t>(c)];
    if (c > 1) level = std::max(level, height[static_cast<std::size_t>(c - 1)]);
    if (c + 1 < p.degree()) level = std::max(level, height[static_cast<std::size_t>(c + 1)]);
    height[static_cast<std::size_t>(c)] = level + 1;
    if (static_cast<int>(l.levels.size()) <= level) l.levels.resize(static_cast<std::size_t>(level) + 1);
    l.levels[static_cast<std::size_t>(level)].push_back(c);
  }
  for (auto& lv : l.levels) std::sort(lv.begin(), lv.end());
  return l;
}

namespace {

std::string_view strip(std::string_view s) {
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int to_int(std::string_view tok, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": invalid token '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Ladder parse_ladder(std::string_view text) {
  Ladder l;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = strip(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (!have_header) {
      if (line.substr(0, 2) != "n=") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'n=<int>' header");
      }
      l.n = to_int(strip(line.substr(2)), line_no);
      if (l.n < 1) throw ParseError("line " + std::to_string(line_no) + ": n must be >= 1");
      have_header = true;
      continue;
    }
    std::vector<int> level;
    std::size_t k = 0;
    while (k < line.size()) {
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      const std::size_t start = k;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      if (k > start) level.push_back(to_int(line.substr(start, k - start), line_no));
    }
    l.levels.push_back(std::move(level));
  }
  if (!have_header) throw ParseError("ladder text has no 'n=<int>' header");
  return l;
}

std::string format_ladder(const Ladder& l) {
  std::ostringstream out;
  out << "n=" << l.n << '\n';
  for (const auto& lv : l.levels) {
    for (std::size_t k = 0; k < lv.size(); ++k) out << (k ? " " : "") << lv[k];
    out << '\n';
  }
  return out.str();
}

std::string render_ascii(const Ladder& l, int rung_width) {
  rung_width = std::max(rung_width, 1);
  std::string out;
  for (const auto& lv : l.levels) {
    for (int line = 1; line <= l.n; ++line) {
      out += '|';
      if (line == l.n) break;
      const bool rung = std::find(lv.begin(), lv.end(), line) != lv.end();
      out.append(static_cast<std::size_t>(rung_width), rung ? '-' : ' ');
    }
    out += '\n';
  }
  return out;
}

}  // namespace permband
