#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eer/error.hpp"
#include "eer/presentation.hpp"
#include "eer/reversing.hpp"
#include "eer/word.hpp"

namespace eer {

// ---------------------------------------------------------------------------
// Divisibility, lcm, gcd and equality over any complete presentation.
// ---------------------------------------------------------------------------

// a\b when a left-divides b, otherwise nullopt.
inline std::optional<Word> left_quotient(const Presentation& p, const Word& a, const Word& b,
                                         std::size_t budget = default_budget) {
  if (a.size() > b.size() && p.is_homogeneous()) return std::nullopt;
  auto r = right_reverse(p, concat(inverse(a), to_signed(b)), budget);
  if (!r.negative.empty()) return std::nullopt;
  return std::move(r.positive);
}

inline bool divides_left(const Presentation& p, const Word& a, const Word& b,
                         std::size_t budget = default_budget) {
  return left_quotient(p, a, b, budget).has_value();
}

struct LcmResult {
  Word lcm;
  Word left_residue;   // a\b
  Word right_residue;  // b\a
};

inline LcmResult lcm_right(const Presentation& p, const Word& a, const Word& b,
                           std::size_t budget = default_budget) {
  auto [ab, ba] = complement(p, a, b, budget);
  return {concat(a, ab), std::move(ab), std::move(ba)};
}

// Strips the least common atom until none divides both residuals.
inline Word gcd_left(const Presentation& p, const Word& a, const Word& b,
                     std::size_t budget = default_budget) {
  Word g, ra = a, rb = b;
  for (bool progress = true; progress;) {
    progress = false;
    for (auto x : p.generators()) {
      auto qa = left_quotient(p, {x}, ra, budget);
      if (!qa) continue;
      auto qb = left_quotient(p, {x}, rb, budget);
      if (!qb) continue;
      g.push_back(x);
      ra = std::move(*qa);
      rb = std::move(*qb);
      progress = true;
      break;
    }
  }
  return g;
}

inline bool equal_monoid(const Presentation& p, const Word& u, const Word& v,
                         std::size_t budget = default_budget) {
  if (p.is_homogeneous() && u.size() != v.size()) return false;
  return right_reverse(p, concat(inverse(u), to_signed(v)), budget).empty();
}

// Fraction method: u^-1 v reverses to P N^-1, and u = v in the group iff
// P = N in the monoid. Sound for Garside presentations.
inline bool equal_group(const Presentation& p, const SignedWord& u, const SignedWord& v,
                        std::size_t budget = default_budget) {
  auto r = right_reverse(p, concat(inverse(u), v), budget);
  return equal_monoid(p, r.positive, r.negative, budget);
}

// Lexicographically least word representing the same element: the least
// atom dividing w, then recursively on the quotient.
inline Word canonical_word(const Presentation& p, const Word& w, std::size_t budget = default_budget) {
  Word out, rest = w;
  while (!rest.empty()) {
    bool found = false;
    for (auto x : p.generators()) {
      if (auto q = left_quotient(p, {x}, rest, budget)) {
        out.push_back(x);
        rest = std::move(*q);
        found = true;
        break;
      }
    }
    if (!found) throw Error("canonical_word: no atom divides a nonempty word");
  }
  return out;
}

// Left divisors of b by breadth-first atom extension, as canonical words in
// shortlex order.
inline std::vector<Word> left_divisors(const Presentation& p, const Word& b,
                                       std::size_t max_elements = 1'000'000,
                                       std::size_t budget = default_budget) {
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  while (!level.empty()) {
    std::set<Word> next;
    for (const auto& d : level)
      for (auto x : p.generators()) {
        Word w = d;
        w.push_back(x);
        if (!divides_left(p, w, b, budget)) continue;
        next.insert(canonical_word(p, w, budget));
      }
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
    if (out.size() > max_elements) throw BudgetExceeded("divisor enumeration exceeded limit");
  }
  return out;
}

// Right divisors of b, read off the left divisors of rev(b) in the reversed
// presentation and brought back as canonical words of p.
inline std::vector<Word> right_divisors(const Presentation& p, const Presentation& mirror, const Word& b,
                                        std::size_t max_elements = 1'000'000,
                                        std::size_t budget = default_budget) {
  std::vector<Word> out;
  for (const auto& d : left_divisors(mirror, reversed(b), max_elements, budget))
    out.push_back(canonical_word(p, reversed(d), budget));
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

struct BalanceReport {
  bool balanced = false;
  std::size_t left_count = 0;
  std::size_t right_count = 0;
};

inline BalanceReport balance(const Presentation& p, const Presentation& mirror, const Word& b,
                             std::size_t max_elements = 1'000'000) {
  auto left = left_divisors(p, b, max_elements);
  auto right = right_divisors(p, mirror, b, max_elements);
  std::sort(left.begin(), left.end(), ShortlexLess{});
  return {left == right, left.size(), right.size()};
}

inline bool is_balanced(const Presentation& p, const Word& b) {
  return balance(p, reverse_presentation(p), b).balanced;
}

// ---------------------------------------------------------------------------
// The Garside structure of B+(e,e,r).
// ---------------------------------------------------------------------------

// tau = t_1 t_0, Lambda_2 = tau, Lambda_k = s_k..s_3 tau s_3..s_k,
// Delta = Lambda_2 ... Lambda_r.
struct GarsideData {
  int e;
  int r;
  Presentation presentation;
  Presentation mirror;  // reverse_presentation(presentation)
  Word tau;
  std::vector<Word> lambdas;  // lambdas[k] = Lambda_k for 2 <= k <= r; slots 0, 1 unused
  Word delta;

  const Word& lambda(int k) const { return lambdas.at(static_cast<std::size_t>(k)); }
};

inline Word tail_run_down(int from, int to) {
  Word out;
  for (int j = from; j >= to; --j) out.push_back(Generator::tail(j));
  return out;
}

inline Word tail_run_up(int from, int to) {
  Word out;
  for (int j = from; j <= to; ++j) out.push_back(Generator::tail(j));
  return out;
}

inline Word tau_word(int e) { return {Generator::circle(1, e), Generator::circle(0, e)}; }

inline Word lambda_word(int e, int k) {
  if (k < 2) throw InvalidArgument("Lambda_k needs k >= 2");
  return concat(tail_run_down(k, 3), tau_word(e), tail_run_up(3, k));
}

inline GarsideData make_garside(int e, int r) {
  auto p = build_eer(e, r);
  auto mirror = reverse_presentation(p);
  GarsideData g{e, r, std::move(p), std::move(mirror), tau_word(e), {}, {}};
  g.lambdas.resize(static_cast<std::size_t>(r) + 1);
  for (int k = 2; k <= r; ++k) {
    g.lambdas[static_cast<std::size_t>(k)] = lambda_word(e, k);
    g.delta = concat(g.delta, g.lambdas[static_cast<std::size_t>(k)]);
  }
  return g;
}

inline const Word& delta(const GarsideData& g) { return g.delta; }

// Conjugation by Delta on letters: t_i -> t_{i+r}, s_p fixed.
inline Word phi(const Word& w, int e, int r) {
  return map_letters(w, [e, r](Generator x) { return shift_circle(x, r, e); });
}

inline Word phi(const GarsideData& g, const Word& w) { return phi(w, g.e, g.r); }

// Order of a permutation given as images of 0..n-1.
inline std::size_t permutation_order(const std::vector<std::size_t>& perm) {
  std::size_t order = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

// For every atom x, the atom y with Delta x = y Delta, found by search.
inline std::vector<Generator> delta_conjugation(const GarsideData& g) {
  const auto& p = g.presentation;
  std::vector<Generator> out;
  for (auto x : p.generators()) {
    std::optional<Generator> image;
    for (auto y : p.generators())
      if (equal_monoid(p, concat(g.delta, Word{x}), concat(Word{y}, g.delta))) {
        image = y;
        break;
      }
    if (!image) throw Error("no atom y with Delta " + to_string(x) + " = y Delta");
    out.push_back(*image);
  }
  return out;
}

inline std::size_t delta_conjugation_order(const GarsideData& g) {
  auto images = delta_conjugation(g);
  std::vector<std::size_t> perm;
  for (auto y : images) perm.push_back(*g.presentation.rank(y));
  return permutation_order(perm);
}

// Ht(t_i) = 2, Ht(s_q) = q, Ht(w) = max over letters, Ht(empty) = 1.
inline int height(const Word& w) {
  int h = 1;
  for (auto x : w) {
    if (x.is_circle()) h = std::max(h, 2);
    else if (x.is_tail()) h = std::max(h, x.index);
    else throw InvalidArgument("height is defined on circle and tail letters only");
  }
  return h;
}

// B+(B_{r-1}) -> B+(e,e,r): q_1 -> tau, q_i -> s_{i+1}.
inline Word psi_embed(const Word& w, int e) {
  Word out;
  for (auto x : w) {
    if (x.kind != GeneratorKind::BraidB) throw InvalidArgument("psi_embed expects q letters");
    if (x.index == 1) out = concat(out, tau_word(e));
    else out.push_back(Generator::tail(x.index + 1));
  }
  return out;
}

// Delta of B+(B_n) as (q_1 ... q_n)^n.
inline Word delta_classical_b(int n) {
  Word run;
  for (int k = 1; k <= n; ++k) run.push_back(Generator::braid_b(k));
  return power(run, n);
}

}  // namespace eer
