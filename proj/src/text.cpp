#include <cctype>
#include <charconv>
#include <set>
#include <string>

#include "permband/error.hpp"
#include "permband/permutation.hpp"

namespace permband {

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

int parse_int_token(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("invalid token '" + std::string(token) + "': expected a positive integer");
  }
  return value;
}

// Splits on whitespace/commas; returns tokens with their text.
std::vector<std::string_view> split_tokens(std::string_view body) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < body.size()) {
    while (k < body.size() && is_separator(body[k])) ++k;
    std::size_t start = k;
    while (k < body.size() && !is_separator(body[k])) ++k;
    if (k > start) out.push_back(body.substr(start, k - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Permutation parse_one_line(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unterminated '[' in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  const auto tokens = split_tokens(body);
  if (tokens.empty()) throw ParseError("empty permutation text");
  const int n = static_cast<int>(tokens.size());
  std::vector<int> image;
  image.reserve(tokens.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto tok : tokens) {
    const int v = parse_int_token(tok);
    if (v < 1 || v > n) {
      throw ParseError("token '" + std::string(tok) + "' out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ParseError("token '" + std::string(tok) + "' repeats a value");
    }
    seen[static_cast<std::size_t>(v)] = 1;
    image.push_back(v);
  }
  return Permutation::from_one_line(std::move(image));
}

Permutation parse_cycle_text(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::set<int> seen;
  std::size_t k = 0;
  int max_entry = 0;
  while (k < text.size()) {
    const char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    if (c != '(') {
      throw ParseError("unexpected '" + std::string(1, c) + "' outside a cycle in '" +
                       std::string(text) + "'");
    }
    const std::size_t close = text.find(')', k);
    if (close == std::string_view::npos) {
      throw ParseError("unterminated cycle starting at '" + std::string(text.substr(k)) + "'");
    }
    const std::string_view body = text.substr(k + 1, close - k - 1);
    if (body.find('(') != std::string_view::npos) {
      throw ParseError("nested '(' in cycle '" + std::string(text.substr(k, close - k + 1)) + "'");
    }
    std::vector<int> cycle;
    for (auto tok : split_tokens(body)) {
      const int v = parse_int_token(tok);
      if (v < 1) throw ParseError("token '" + std::string(tok) + "' must be >= 1");
      if (!seen.insert(v).second) {
        throw ParseError("token '" + std::string(tok) + "' appears in more than one cycle position");
      }
      max_entry = std::max(max_entry, v);
      cycle.push_back(v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    k = close + 1;
  }
  const int degree = n > 0 ? n : std::max(max_entry, 1);
  if (max_entry > degree) {
    throw ParseError("cycle entry " + std::to_string(max_entry) + " exceeds degree " +
                     std::to_string(degree));
  }
  return from_cycles(degree, cycles);
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  const std::string_view body = trim(text);
  Permutation p = (!body.empty() && body.front() == '(') ? parse_cycle_text(body, n)
                                                         : parse_one_line(body);
  if (n > 0 && p.degree() != n) {
    throw ParseError("permutation '" + std::string(body) + "' has degree " +
                     std::to_string(p.degree()) + ", expected " + std::to_string(n));
  }
  return p;
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int x = 1; x <= p.degree(); ++x) {
    if (x > 1) out += ' ';
    out += std::to_string(p(x));
  }
  return out;
}

std::string format_cycle(std::span<const int> cycle) {
  std::string out = "(";
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(cycle[k]);
  }
  return out + ")";
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& c : cycle_decomposition(p).cycles) {
    if (c.size() > 1) out += format_cycle(c);
  }
  return out.empty() ? "()" : out;
}

std::string format_transposition(Transposition t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

}  // namespace permband
