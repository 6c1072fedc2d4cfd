#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "eer/error.hpp"
#include "eer/garside.hpp"
#include "eer/reversing.hpp"
#include "eer/word.hpp"

namespace eer {

// A group model supplies `element`, multiply, inverse, equal and reduce
// (any equal element of smaller size; identity is acceptable).
template <class G>
concept GroupModel = requires(const G& g, const typename G::element& a) {
  { g.multiply(a, a) } -> std::convertible_to<typename G::element>;
  { g.inverse(a) } -> std::convertible_to<typename G::element>;
  { g.equal(a, a) } -> std::convertible_to<bool>;
  { g.reduce(a) } -> std::convertible_to<typename G::element>;
};

// The braid group B(e,e,r) (or any Garside group) as signed words. Elements
// are kept as right-reversed fractions P N^-1.
class BraidGroup {
 public:
  using element = SignedWord;

  explicit BraidGroup(const Presentation& p, std::size_t budget = default_budget) : p_(&p), budget_(budget) {}

  element multiply(const element& a, const element& b) const { return concat(a, b); }
  element inverse(const element& a) const { return eer::inverse(a); }
  bool equal(const element& a, const element& b) const { return equal_group(*p_, a, b, budget_); }
  element reduce(const element& a) const {
    auto r = right_reverse(*p_, a, budget_);
    return concat(to_signed(r.positive), eer::inverse(r.negative));
  }

 private:
  const Presentation* p_;
  std::size_t budget_;
};

template <class Element>
struct Circle {
  std::map<int, Element> members;  // g_i for -bound <= i <= bound
  Element gamma;                   // g_1 g_0
  std::size_t cardinality = 0;
};

// g_i = g_{i-1} g_{i-2} g_{i-1}^-1 for i > 1 and g_{i+1}^-1 g_{i+2} g_{i+1}
// for i < 0. The cardinality is the least p > 0 with g_p = g_0; throws
// NoPeriodFound when none exists up to `bound`.
template <GroupModel G>
Circle<typename G::element> circle_make(const G& group, const typename G::element& g1,
                                        const typename G::element& g0, int bound) {
  if (bound < 1) throw InvalidArgument("circle bound must be >= 1");
  Circle<typename G::element> c;
  auto& m = c.members;
  m.emplace(1, group.reduce(g1));
  m.emplace(0, group.reduce(g0));
  for (int i = 2; i <= bound; ++i)
    m.emplace(i, group.reduce(group.multiply(group.multiply(m.at(i - 1), m.at(i - 2)), group.inverse(m.at(i - 1)))));
  for (int i = -1; i >= -bound; --i)
    m.emplace(i, group.reduce(group.multiply(group.multiply(group.inverse(m.at(i + 1)), m.at(i + 2)), m.at(i + 1))));
  c.gamma = group.reduce(group.multiply(m.at(1), m.at(0)));
  for (int p = 1; p <= bound; ++p)
    if (group.equal(m.at(p), m.at(0))) {
      c.cardinality = static_cast<std::size_t>(p);
      return c;
    }
  throw NoPeriodFound("circle has no period up to " + std::to_string(bound));
}

inline int default_circle_bound(int e) { return 4 * e; }

}  // namespace eer
