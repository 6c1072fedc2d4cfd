#include <catch_amalgamated.hpp>

#include "eer/circle.hpp"
#include "eer/reflection.hpp"

using namespace eer;

namespace {

Generator t(int i, int e) { return Generator::circle(i, e); }

// The free group on the braid_a letters, reduced by free cancellation.
struct FreeGroup {
  using element = SignedWord;
  element multiply(const element& a, const element& b) const { return reduce(concat(a, b)); }
  element inverse(const element& a) const { return eer::inverse(a); }
  bool equal(const element& a, const element& b) const { return reduce(a) == reduce(b); }
  element reduce(const element& a) const {
    element out;
    for (const auto& l : a) {
      if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse) out.pop_back();
      else out.push_back(l);
    }
    return out;
  }
};
static_assert(GroupModel<FreeGroup>);
static_assert(GroupModel<BraidGroup>);
static_assert(GroupModel<ReflectionGroup>);

}  // namespace

TEST_CASE("braid circles of (t1, t0) have cardinality e", "[circle]") {
  for (int e = 1; e <= 6; ++e) {
    auto p = build_eer(e, 3);
    BraidGroup group(p);
    auto c = circle_make(group, to_signed(Word{t(1, e)}), to_signed(Word{t(0, e)}), default_circle_bound(e));
    CAPTURE(e);
    CHECK(c.cardinality == static_cast<std::size_t>(e));
    CHECK(group.equal(c.gamma, to_signed(tau_word(e))));
    // Every member is the expected atom, in both directions.
    for (const auto& [i, g] : c.members) {
      CAPTURE(i);
      CHECK(group.equal(g, to_signed(Word{t(i, e)})));
    }
  }
}

TEST_CASE("gamma g_i = g_{i+2} gamma", "[circle]") {
  for (int e = 2; e <= 5; ++e) {
    auto p = build_eer(e, 4);
    BraidGroup group(p);
    auto c = circle_make(group, to_signed(Word{t(1, e)}), to_signed(Word{t(0, e)}), 2 * e);
    for (int i = -2 * e; i + 2 <= 2 * e; ++i)
      CHECK(group.equal(concat(c.gamma, c.members.at(i)), concat(c.members.at(i + 2), c.gamma)));
  }
}

TEST_CASE("matrix circles have cardinality e", "[circle]") {
  for (int e = 1; e <= 8; ++e) {
    ReflectionGroup group(e, 3);
    auto c = circle_make(group, group.generator(t(1, e)), group.generator(t(0, e)), default_circle_bound(e));
    CAPTURE(e);
    CHECK(c.cardinality == static_cast<std::size_t>(e));
    for (const auto& [i, g] : c.members) CHECK(g == generator_matrix(t(i, e), e, 3));
  }
}

TEST_CASE("projection commutes with the circle", "[circle]") {
  const int e = 4;
  auto p = build_eer(e, 3);
  BraidGroup braids(p);
  ReflectionGroup matrices(e, 3);
  auto a = circle_make(braids, to_signed(Word{t(1, e)}), to_signed(Word{t(0, e)}), 8);
  auto b = circle_make(matrices, matrices.generator(t(1, e)), matrices.generator(t(0, e)), 8);
  for (int i = -8; i <= 8; ++i) CHECK(project(a.members.at(i), e, 3) == b.members.at(i));
}

TEST_CASE("circle failures", "[circle]") {
  const auto a = Generator::braid_a;
  FreeGroup free;
  CHECK_THROWS_AS(circle_make(free, SignedWord{{a(1), false}}, SignedWord{{a(2), false}}, 10), NoPeriodFound);
  // Equal generators give cardinality one even in a free group.
  auto c = circle_make(free, SignedWord{{a(1), false}}, SignedWord{{a(1), false}}, 3);
  CHECK(c.cardinality == 1);
  CHECK_THROWS_AS(circle_make(free, SignedWord{}, SignedWord{}, 0), InvalidArgument);
  // The braid circle needs its full period inside the bound.
  auto p = build_eer(5, 3);
  CHECK_THROWS_AS(circle_make(BraidGroup(p), to_signed(Word{t(1, 5)}), to_signed(Word{t(0, 5)}), 4), NoPeriodFound);
}
