#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eer/error.hpp"
#include "eer/presentation.hpp"
#include "eer/word.hpp"

namespace eer {

inline constexpr std::size_t default_budget = 1'000'000;

// Terminal form of a reversal. For right reversing the represented word is
// positive . negative^-1; for left reversing it is negative^-1 . positive.
// In both cases `negative` is stored as a positive word.
struct ReversalResult {
  Word positive;
  Word negative;
  std::size_t steps = 0;

  bool empty() const { return positive.empty() && negative.empty(); }
  friend bool operator==(const ReversalResult&, const ReversalResult&) = default;
};

struct TraceStep {
  enum class Rule { Cancel, Complement };
  std::size_t position;  // index of the x^-1 letter in the word before the step
  Rule rule;
  Generator left;   // x
  Generator right;  // y
};

inline std::string to_string(const TraceStep& step) {
  return std::to_string(step.position) + ' ' +
         (step.rule == TraceStep::Rule::Cancel ? "cancel" : "complement") + ' ' + "-" +
         to_string(step.left) + ' ' + to_string(step.right);
}

namespace detail {

// Core right reversing over ranks, leftmost strategy. Signed letters are
// encoded as +(rank+1) / -(rank+1).
//
// The word is kept as P . N^-1 . pending where P is positive, N holds the
// negative letters in word order and `pending` is a stack of unread
// letters. The first neg-pos adjacency is always at the N|pending seam,
// so this is exactly the leftmost rewrite order.
inline ReversalResult reverse_right(const Presentation& p, const SignedWord& w, std::size_t budget,
                                    std::vector<TraceStep>* trace) {
  using Rank = Presentation::Rank;
  std::vector<int> pending;
  pending.reserve(w.size() * 2);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto k = p.rank(it->gen);
    if (!k) throw InvalidArgument("generator " + to_string(it->gen) + " not in presentation");
    pending.push_back(it->inverse ? -(*k + 1) : (*k + 1));
  }
  std::vector<Rank> pos, neg;
  std::size_t steps = 0;
  while (!pending.empty()) {
    const int c = pending.back();
    pending.pop_back();
    if (c < 0) {
      neg.push_back(static_cast<Rank>(-c - 1));
      continue;
    }
    const auto y = static_cast<Rank>(c - 1);
    if (neg.empty()) {
      pos.push_back(y);
      continue;
    }
    const Rank x = neg.back();
    neg.pop_back();
    if (++steps > budget) throw BudgetExceeded("reversing exceeded " + std::to_string(budget) + " steps");
    if (trace)
      trace->push_back({pos.size() + neg.size(), x == y ? TraceStep::Rule::Cancel : TraceStep::Rule::Complement,
                        p.generator(x), p.generator(y)});
    if (x == y) continue;
    const auto* u = p.complement_ranks(x, y);
    const auto* v = p.complement_ranks(y, x);
    if (!u || !v)
      throw StuckReversal("no relation headed by " + to_string(p.generator(x)) + ", " + to_string(p.generator(y)));
    // x^-1 y -> u v^-1: feed u first, then v^-1.
    for (auto k : *v) pending.push_back(-(k + 1));
    for (auto it = u->rbegin(); it != u->rend(); ++it) pending.push_back(*it + 1);
  }
  ReversalResult out;
  out.positive = p.from_ranks(pos);
  out.negative = p.from_ranks(std::vector<Rank>(neg.rbegin(), neg.rend()));
  out.steps = steps;
  return out;
}

}  // namespace detail

// Rewrites the leftmost x^-1 y until the word has the form P . N^-1.
inline ReversalResult right_reverse(const Presentation& p, const SignedWord& w,
                                    std::size_t budget = default_budget,
                                    std::vector<TraceStep>* trace = nullptr) {
  return detail::reverse_right(p, w, budget, trace);
}

// Mirror of right reversing: x y^-1 -> v^-1 u. Runs right reversing on the
// letter-reversed word over the reversed presentation and reads the result
// backwards. `mirror` must be reverse_presentation(p).
inline ReversalResult left_reverse(const Presentation& mirror, const SignedWord& w,
                                   std::size_t budget = default_budget) {
  auto r = detail::reverse_right(mirror, reversed(w), budget, nullptr);
  return {reversed(std::move(r.positive)), reversed(std::move(r.negative)), r.steps};
}

inline ReversalResult left_reverse_in(const Presentation& p, const SignedWord& w,
                                      std::size_t budget = default_budget) {
  return left_reverse(reverse_presentation(p), w, budget);
}

// (u\v, v\u): the positive and negative parts of u^-1 v reversed.
inline std::pair<Word, Word> complement(const Presentation& p, const Word& u, const Word& v,
                                        std::size_t budget = default_budget) {
  auto r = right_reverse(p, concat(inverse(u), to_signed(v)), budget);
  return {std::move(r.positive), std::move(r.negative)};
}

// Cube condition on (x, y, z): if x^-1 z z^-1 y reverses to v' u'^-1 then
// (x v')^-1 (y u') must reverse to the empty word. A first reversal that
// gets stuck makes the implication vacuous. BudgetExceeded propagates.
inline bool cube_condition(const Presentation& p, const Word& x, const Word& y, const Word& z,
                           std::size_t budget = default_budget) {
  ReversalResult first;
  try {
    first = right_reverse(p, concat(inverse(x), to_signed(z), inverse(z), to_signed(y)), budget);
  } catch (const StuckReversal&) {
    return true;
  }
  try {
    auto second = right_reverse(p, concat(inverse(concat(x, first.positive)), to_signed(concat(y, first.negative))),
                                budget);
    return second.empty();
  } catch (const StuckReversal&) {
    return false;
  }
}

struct CompletenessReport {
  enum class Status { Pass, Fail, NotHomogeneous, NotComplemented };
  Status status = Status::Pass;
  std::optional<std::array<Generator, 3>> failing;  // least failing triple
  std::size_t triples_checked = 0;

  bool passed() const { return status == Status::Pass; }
};

inline std::string to_string(CompletenessReport::Status s) {
  switch (s) {
    case CompletenessReport::Status::Pass: return "pass";
    case CompletenessReport::Status::Fail: return "fail";
    case CompletenessReport::Status::NotHomogeneous: return "not-homogeneous";
    case CompletenessReport::Status::NotComplemented: return "not-complemented";
  }
  return "?";
}

// Cube condition on every ordered triple of generators, in lexicographic
// order. With `pruned`, skips (x,y,x) and (x,x,y) and checks only one of
// (x,y,z) / (y,x,z).
inline CompletenessReport check_completeness(const Presentation& p, bool pruned = false,
                                             std::size_t budget = default_budget) {
  CompletenessReport report;
  if (!p.is_homogeneous()) {
    report.status = CompletenessReport::Status::NotHomogeneous;
    return report;
  }
  if (!p.is_complemented()) {
    report.status = CompletenessReport::Status::NotComplemented;
    return report;
  }
  const auto& gens = p.generators();
  const std::size_t n = gens.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (pruned && (i == k || i == j || j < i)) continue;
        ++report.triples_checked;
        if (!cube_condition(p, {gens[i]}, {gens[j]}, {gens[k]}, budget)) {
          report.status = CompletenessReport::Status::Fail;
          report.failing = std::array<Generator, 3>{gens[i], gens[j], gens[k]};
          return report;
        }
      }
  return report;
}

}  // namespace eer
