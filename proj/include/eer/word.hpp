#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eer/error.hpp"

namespace eer {

// Declaration order is the canonical generator order: every circle letter
// precedes every tail letter, and within a kind letters sort by index.
enum class GeneratorKind : std::uint8_t {
  Circle,  // t_i, i in Z/e
  Tail,    // s_j, 3 <= j <= r
  BraidA,  // a_k, classical type A
  BraidB,  // q_k, classical type B (q_1 is the doubled node)
};

struct Generator {
  GeneratorKind kind = GeneratorKind::Circle;
  int index = 0;

  // Circle indices are stored reduced to {0, ..., e-1}.
  static Generator circle(long long i, int e) {
    if (e <= 0) throw InvalidArgument("circle generator needs e >= 1");
    long long m = i % e;
    if (m < 0) m += e;
    return {GeneratorKind::Circle, static_cast<int>(m)};
  }
  static constexpr Generator tail(int j) { return {GeneratorKind::Tail, j}; }
  static constexpr Generator braid_a(int k) { return {GeneratorKind::BraidA, k}; }
  static constexpr Generator braid_b(int k) { return {GeneratorKind::BraidB, k}; }

  bool is_circle() const { return kind == GeneratorKind::Circle; }
  bool is_tail() const { return kind == GeneratorKind::Tail; }

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

struct SignedLetter {
  Generator gen;
  bool inverse = false;

  friend constexpr auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

using SignedWord = std::vector<SignedLetter>;

inline char token_prefix(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Circle: return 't';
    case GeneratorKind::Tail: return 's';
    case GeneratorKind::BraidA: return 'a';
    case GeneratorKind::BraidB: return 'q';
  }
  return '?';
}

inline std::string to_string(Generator g) {
  return token_prefix(g.kind) + std::to_string(g.index);
}

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

inline std::string to_string(const SignedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    if (w[i].inverse) out += '-';
    out += to_string(w[i].gen);
  }
  return out;
}

// Syntax only: `t<i>`, `s<j>`, `a<k>`, `q<k>`, optionally prefixed by `-`.
// Range checks against a presentation live in presentation.hpp.
inline SignedLetter parse_token(std::string_view tok) {
  SignedLetter out;
  std::string_view t = tok;
  if (!t.empty() && t.front() == '-') {
    out.inverse = true;
    t.remove_prefix(1);
  }
  if (t.size() < 2) throw ParseError("bad generator token '" + std::string(tok) + "'");
  switch (t.front()) {
    case 't': out.gen.kind = GeneratorKind::Circle; break;
    case 's': out.gen.kind = GeneratorKind::Tail; break;
    case 'a': out.gen.kind = GeneratorKind::BraidA; break;
    case 'q': out.gen.kind = GeneratorKind::BraidB; break;
    default: throw ParseError("bad generator token '" + std::string(tok) + "'");
  }
  t.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || value < 0)
    throw ParseError("bad generator index in '" + std::string(tok) + "'");
  out.gen.index = value;
  return out;
}

inline std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

inline SignedWord to_signed(const Word& w) {
  SignedWord out;
  out.reserve(w.size());
  for (auto g : w) out.push_back({g, false});
  return out;
}

// Formal inverse: reversed order, flipped signs.
inline SignedWord inverse(const SignedWord& w) {
  SignedWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

inline SignedWord inverse(const Word& w) { return inverse(to_signed(w)); }

template <class W>
W concat(W a, const W& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class W, class... Rest>
W concat(W a, const W& b, const Rest&... rest) {
  return concat(concat(std::move(a), b), rest...);
}

// Letter order reversed, signs kept.
template <class W>
W reversed(W w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline Word power(const Word& w, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// <ab>^m = abab... with m letters.
inline Word alternating_product(Generator a, Generator b, int m) {
  if (m < 0) throw InvalidArgument("alternating product length must be >= 0");
  Word out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out.push_back(i % 2 == 0 ? a : b);
  return out;
}

// Length first, then lexicographic in canonical generator order.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

}  // namespace eer
