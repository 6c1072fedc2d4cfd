#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eer/error.hpp"
#include "eer/presentation.hpp"
#include "eer/simples.hpp"
#include "eer/word.hpp"

namespace eer {

// r x r monomial matrix over {0} u mu_e. Row i holds zeta^exponent(i) in
// column perm(i) (0-based); zeta is a fixed primitive e-th root of unity,
// kept symbolic.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;

  MonomialMatrix(int e, std::vector<int> perm, std::vector<int> exponents)
      : e_(e), perm_(std::move(perm)), exp_(std::move(exponents)) {
    if (e_ < 1) throw InvalidArgument("MonomialMatrix needs e >= 1");
    if (perm_.size() != exp_.size()) throw InvalidArgument("MonomialMatrix: size mismatch");
    std::vector<bool> hit(perm_.size(), false);
    for (int c : perm_) {
      if (c < 0 || static_cast<std::size_t>(c) >= perm_.size() || hit[static_cast<std::size_t>(c)])
        throw InvalidArgument("MonomialMatrix: not a permutation");
      hit[static_cast<std::size_t>(c)] = true;
    }
    for (auto& k : exp_) k = ((k % e_) + e_) % e_;
  }

  static MonomialMatrix identity(int r, int e) {
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    return MonomialMatrix(e, std::move(perm), std::vector<int>(static_cast<std::size_t>(r), 0));
  }

  int e() const { return e_; }
  std::size_t size() const { return perm_.size(); }
  const std::vector<int>& permutation() const { return perm_; }
  const std::vector<int>& exponents() const { return exp_; }

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.e_ != b.e_ || a.size() != b.size()) throw InvalidArgument("MonomialMatrix: shape mismatch");
    std::vector<int> perm(a.size()), exps(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto j = static_cast<std::size_t>(a.perm_[i]);
      perm[i] = b.perm_[j];
      exps[i] = a.exp_[i] + b.exp_[j];
    }
    return MonomialMatrix(a.e_, std::move(perm), std::move(exps));
  }

  MonomialMatrix inverse() const {
    std::vector<int> perm(size()), exps(size());
    for (std::size_t i = 0; i < size(); ++i) {
      const auto j = static_cast<std::size_t>(perm_[i]);
      perm[j] = static_cast<int>(i);
      exps[j] = -exp_[i];
    }
    return MonomialMatrix(e_, std::move(perm), std::move(exps));
  }

  // Exponent of the product of the nonzero entries.
  int exponent_sum() const { return std::accumulate(exp_.begin(), exp_.end(), 0) % e_; }

  // dim ker(M - I): one per cycle of perm whose entries multiply to 1.
  std::size_t fixed_space_dimension() const {
    std::size_t dim = 0;
    std::vector<bool> seen(size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      int sum = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm_[j])) {
        seen[j] = true;
        sum += exp_[j];
      }
      if (sum % e_ == 0) ++dim;
    }
    return dim;
  }

  bool is_identity() const { return *this == identity(static_cast<int>(size()), e_); }

  friend auto operator<=>(const MonomialMatrix&, const MonomialMatrix&) = default;
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  int e_ = 1;
  std::vector<int> perm_;
  std::vector<int> exp_;
};

inline std::string bracket_list(const std::vector<int>& v, int offset) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i] + offset);
  }
  return out + "]";
}

// `perm=[s(1),...,s(r)] exp=[k_1,...,k_r] (mod e)`, perm 1-based.
inline std::string to_string(const MonomialMatrix& m) {
  return "perm=" + bracket_list(m.permutation(), 1) + " exp=" + bracket_list(m.exponents(), 0) + " (mod " +
         std::to_string(m.e()) + ")";
}

// t_i -> [[0, z^-i], [z^i, 0]] + I_{r-2};  s_j -> permutation matrix of (j-1 j).
inline MonomialMatrix generator_matrix(Generator g, int e, int r) {
  auto m = MonomialMatrix::identity(r, e);
  std::vector<int> perm = m.permutation(), exps = m.exponents();
  if (g.is_circle()) {
    if (r < 2) throw InvalidArgument("circle generator needs r >= 2");
    std::swap(perm[0], perm[1]);
    exps[0] = -g.index;
    exps[1] = g.index;
  } else if (g.is_tail()) {
    if (g.index < 3 || g.index > r) throw InvalidArgument("tail generator out of range: " + to_string(g));
    std::swap(perm[static_cast<std::size_t>(g.index - 2)], perm[static_cast<std::size_t>(g.index - 1)]);
  } else {
    throw InvalidArgument("generator_matrix: not an (e,e,r) generator");
  }
  return MonomialMatrix(e, std::move(perm), std::move(exps));
}

inline MonomialMatrix project(const SignedWord& w, int e, int r) {
  auto out = MonomialMatrix::identity(r, e);
  for (const auto& l : w) {
    auto m = generator_matrix(l.gen, e, r);
    out = out * (l.inverse ? m.inverse() : m);
  }
  return out;
}

inline MonomialMatrix project(const Word& w, int e, int r) { return project(to_signed(w), e, r); }

// Breadth-first closure of the generator matrices, in canonical order.
inline std::vector<MonomialMatrix> enumerate_group(int e, int r, std::size_t max_elements = 10'000'000) {
  auto p = build_eer(e, r);
  std::vector<MonomialMatrix> gens;
  for (auto g : p.generators()) gens.push_back(generator_matrix(g, e, r));
  std::set<MonomialMatrix> seen{MonomialMatrix::identity(r, e)};
  std::deque<MonomialMatrix> queue{MonomialMatrix::identity(r, e)};
  while (!queue.empty()) {
    auto m = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      auto next = m * s;
      if (seen.insert(next).second) {
        if (seen.size() > max_elements) throw BudgetExceeded("group enumeration exceeded limit");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<MonomialMatrix> simples_image(const GarsideData& g) {
  std::set<MonomialMatrix> image;
  for (const auto& s : simples_closed(g)) image.insert(project(s.word, g.e, g.r));
  return {image.begin(), image.end()};
}

struct GroupRelationReport {
  bool ok = true;
  std::size_t relations_checked = 0;
  std::size_t squares_checked = 0;
  std::optional<std::string> failure;
};

// Every defining relation and every a^2 = 1 among the generator matrices.
inline GroupRelationReport verify_group_relations(int e, int r) {
  auto p = build_eer(e, r);
  GroupRelationReport report;
  for (const auto& rel : p.relations()) {
    ++report.relations_checked;
    if (project(rel.lhs, e, r) != project(rel.rhs, e, r)) {
      report.ok = false;
      report.failure = to_string(rel.lhs) + " = " + to_string(rel.rhs);
      return report;
    }
  }
  for (auto g : p.generators()) {
    ++report.squares_checked;
    auto m = generator_matrix(g, e, r);
    if (!(m * m).is_identity()) {
      report.ok = false;
      report.failure = to_string(g) + "^2 = 1";
      return report;
    }
  }
  return report;
}

// G(e,e,r) as a group model for circle_make.
class ReflectionGroup {
 public:
  using element = MonomialMatrix;

  ReflectionGroup(int e, int r) : e_(e), r_(r) {}
  element multiply(const element& a, const element& b) const { return a * b; }
  element inverse(const element& a) const { return a.inverse(); }
  bool equal(const element& a, const element& b) const { return a == b; }
  element reduce(const element& a) const { return a; }
  element generator(Generator g) const { return generator_matrix(g, e_, r_); }

 private:
  int e_;
  int r_;
};

}  // namespace eer
