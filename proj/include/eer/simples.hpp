#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eer/error.hpp"
#include "eer/garside.hpp"
#include "eer/presentation.hpp"
#include "eer/word.hpp"

namespace eer {

// The nontrivial left divisors of Lambda_k come in four shapes:
//   ThroughTau  s_k..s_3 tau s_3..s_j   (3 <= j <= k)
//   UpToTau     s_k..s_3 tau
//   CircleAtom  s_k..s_3 t_i            (i in Z/e)
//   TailOnly    s_k..s_j                (3 <= j <= k)
// plus the empty word. For k = 2 only CircleAtom (t_i) and UpToTau (tau)
// are nonempty.
enum class DivisorShape : std::uint8_t { Empty, ThroughTau, UpToTau, CircleAtom, TailOnly };

struct LambdaDivisor {
  DivisorShape shape = DivisorShape::Empty;
  int param = 0;  // j for ThroughTau / TailOnly, i for CircleAtom
  Word word;

  friend bool operator==(const LambdaDivisor& a, const LambdaDivisor& b) {
    return a.shape == b.shape && a.param == b.param;
  }
};

// All 2(k-1) + e left divisors of Lambda_k, in shortlex order of their words.
inline std::vector<LambdaDivisor> lambda_divisors(int e, int k) {
  if (k < 2) throw InvalidArgument("lambda_divisors needs k >= 2");
  std::vector<LambdaDivisor> out;
  const Word head = tail_run_down(k, 3);
  out.push_back({DivisorShape::Empty, 0, {}});
  for (int j = 3; j <= k; ++j)
    out.push_back({DivisorShape::ThroughTau, j, concat(head, tau_word(e), tail_run_up(3, j))});
  out.push_back({DivisorShape::UpToTau, 0, concat(head, tau_word(e))});
  for (int i = 0; i < e; ++i)
    out.push_back({DivisorShape::CircleAtom, i, concat(head, Word{Generator::circle(i, e)})});
  for (int j = 3; j <= k; ++j) out.push_back({DivisorShape::TailOnly, j, tail_run_down(k, j)});
  std::stable_sort(out.begin(), out.end(),
                   [](const LambdaDivisor& a, const LambdaDivisor& b) { return shortlex_less(a.word, b.word); });
  return out;
}

// A simple p_2 p_3 ... p_r with p_k a left divisor of Lambda_k.
struct Simple {
  std::vector<LambdaDivisor> parts;  // parts[0] is p_2
  Word word;

  friend bool operator==(const Simple& a, const Simple& b) { return a.parts == b.parts; }
};

// `word <tab> p_2|p_3|...|p_r`
inline std::string tuple_string(const Simple& s) {
  std::string out;
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (i) out += '|';
    out += to_string(s.parts[i].word);
  }
  return out;
}

inline std::string export_line(const Simple& s) { return to_string(s.word) + '\t' + tuple_string(s); }

inline bool simple_less(const Simple& a, const Simple& b) { return shortlex_less(a.word, b.word); }

inline Simple make_simple(std::vector<LambdaDivisor> parts) {
  Simple s{std::move(parts), {}};
  for (const auto& d : s.parts) s.word = concat(s.word, d.word);
  return s;
}

// Every tuple (p_2, ..., p_r), sorted by canonical word.
inline std::vector<Simple> simples_closed(int e, int r) {
  if (e < 1 || r < 2) throw InvalidArgument("simples_closed needs e >= 1, r >= 2");
  std::vector<std::vector<LambdaDivisor>> per_k;
  for (int k = 2; k <= r; ++k) per_k.push_back(lambda_divisors(e, k));
  std::vector<Simple> out;
  std::vector<std::size_t> idx(per_k.size(), 0);
  while (true) {
    std::vector<LambdaDivisor> parts;
    parts.reserve(per_k.size());
    for (std::size_t k = 0; k < per_k.size(); ++k) parts.push_back(per_k[k][idx[k]]);
    out.push_back(make_simple(std::move(parts)));
    std::size_t k = per_k.size();
    while (k > 0) {
      --k;
      if (++idx[k] < per_k[k].size()) break;
      idx[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end(), simple_less);
        return out;
      }
    }
  }
}

inline std::vector<Simple> simples_closed(const GarsideData& g) { return simples_closed(g.e, g.r); }

// Independent enumeration of the left divisors of Delta: breadth-first atom
// extension filtered by divisibility, deduplicated by canonical word.
inline std::vector<Word> simples_oracle(const GarsideData& g, std::size_t max_elements = 1'000'000) {
  return left_divisors(g.presentation, g.delta, max_elements);
}

// Tuple form of a simple element given by any word. Peels the prefix
// products Lambda_2...Lambda_k: with P_k = s ^ (Lambda_2...Lambda_k), the
// quotient P_{k-1}\P_k is a divisor of Lambda_k.
inline Simple decompose_simple(const GarsideData& g, const Word& s) {
  const auto& p = g.presentation;
  std::vector<LambdaDivisor> parts;
  Word prefix_product, previous_gcd;
  for (int k = 2; k <= g.r; ++k) {
    prefix_product = concat(prefix_product, g.lambda(k));
    Word current = gcd_left(p, s, prefix_product);
    auto piece = left_quotient(p, previous_gcd, current);
    if (!piece) throw Error("decompose_simple: gcd chain is not increasing");
    bool matched = false;
    for (auto& d : lambda_divisors(g.e, k))
      if (equal_monoid(p, d.word, *piece)) {
        parts.push_back(std::move(d));
        matched = true;
        break;
      }
    if (!matched) throw InvalidArgument("decompose_simple: " + to_string(s) + " is not a simple");
    previous_gcd = std::move(current);
  }
  auto out = make_simple(std::move(parts));
  if (!equal_monoid(p, out.word, s)) throw InvalidArgument("decompose_simple: " + to_string(s) + " is not a simple");
  return out;
}

// Left-greedy normal form Delta^k s_1 ... s_m with s_1 = Delta ^ (rest).
// A factor outside the closed-form families (possible only for e = 1,
// r >= 3) keeps empty parts and its canonical word. Equality compares the
// factor words, which are unique per element either way.
struct NormalForm {
  std::size_t delta_power = 0;
  std::vector<Simple> factors;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    if (a.delta_power != b.delta_power || a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
      if (a.factors[i].word != b.factors[i].word) return false;
    return true;
  }

  Word word(const GarsideData& g) const {
    Word out = power(g.delta, static_cast<int>(delta_power));
    for (const auto& s : factors) out = concat(out, s.word);
    return out;
  }
};

inline std::string to_string(const NormalForm& nf) {
  std::string out = "D^" + std::to_string(nf.delta_power);
  for (const auto& s : nf.factors) out += " . (" + to_string(s.word) + ")";
  return out;
}

inline NormalForm normal_form(const GarsideData& g, const Word& w) {
  const auto& p = g.presentation;
  NormalForm nf;
  Word rest = w;
  while (auto q = left_quotient(p, g.delta, rest)) {
    rest = std::move(*q);
    ++nf.delta_power;
  }
  while (!rest.empty()) {
    Word head = gcd_left(p, g.delta, rest);
    auto q = left_quotient(p, head, rest);
    if (head.empty() || !q) throw Error("normal_form: greedy head is trivial");
    try {
      nf.factors.push_back(decompose_simple(g, head));
    } catch (const InvalidArgument&) {
      nf.factors.push_back({{}, canonical_word(p, head)});
    }
    rest = std::move(*q);
  }
  return nf;
}

// The lattice of simples under left divisibility. Elements are indexed by
// the shortlex order of their closed-form words.
struct SimpleLattice {
  std::vector<Simple> elements;
  std::vector<std::vector<std::size_t>> covers;  // i -> j when element j = element i . atom
  std::vector<std::vector<std::uint64_t>> below;  // bitset row j: all i with i <= j

  bool leq(std::size_t i, std::size_t j) const { return (below[j][i / 64] >> (i % 64)) & 1U; }
};

inline SimpleLattice simple_lattice(const GarsideData& g) {
  const auto& p = g.presentation;
  SimpleLattice lat;
  lat.elements = simples_closed(g);
  const std::size_t n = lat.elements.size();
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(canonical_word(p, lat.elements[i].word), i);
  lat.covers.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (auto x : p.generators()) {
      Word w = concat(lat.elements[i].word, Word{x});
      if (!divides_left(p, w, g.delta)) continue;
      auto it = index.find(canonical_word(p, w));
      if (it == index.end()) throw Error("simple_lattice: divisor of Delta missing from closed form");
      lat.covers[i].push_back(it->second);
    }
  for (auto& c : lat.covers) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  // Closed-form elements are sorted by length, so every cover goes forward.
  const std::size_t words = (n + 63) / 64;
  lat.below.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < n; ++j) lat.below[j][j / 64] |= std::uint64_t{1} << (j % 64);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : lat.covers[i])
      for (std::size_t w = 0; w < words; ++w) lat.below[j][w] |= lat.below[i][w];
  return lat;
}

// Graphviz digraph of the covering relation.
inline std::string lattice_dot(const SimpleLattice& lat) {
  std::ostringstream out;
  out << "digraph simples {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.elements.size(); ++i)
    out << "  n" << i << " [label=\"" << to_string(lat.elements[i].word) << "\"];\n";
  for (std::size_t i = 0; i < lat.covers.size(); ++i)
    for (auto j : lat.covers[i]) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace eer
