#include <catch_amalgamated.hpp>

#include <random>

#include "eer/simples.hpp"
#include "support/oracles.hpp"

using namespace eer;

// Randomized checks, at least 1000 cases per presentation. Seeds are fixed
// so failures reproduce.

namespace {

const std::vector<std::pair<int, int>> shapes{{3, 3}, {4, 3}, {2, 4}, {1, 3}, {5, 4}, {3, 4}};

constexpr int cases = 1000;

// A pair that is equal half of the time: v is either a relation walk from u
// or an independent word of the same length.
std::pair<Word, Word> random_pair(const Presentation& p, std::size_t len, std::mt19937_64& rng) {
  auto u = testing::random_word(p, len, rng);
  if (std::bernoulli_distribution(0.5)(rng)) return {u, testing::random_rewrite(p, u, 1 + len, rng)};
  return {u, testing::random_word(p, len, rng)};
}

}  // namespace

TEST_CASE("normal form is a complete invariant", "[properties]") {
  for (auto [e, r] : shapes) {
    auto g = make_garside(e, r);
    const auto& p = g.presentation;
    std::mt19937_64 rng(1000003ULL * static_cast<std::uint64_t>(e) + static_cast<std::uint64_t>(r));
    const int n = (e == 3 && r == 3) ? 5000 : cases;
    int equal_pairs = 0;
    for (int k = 0; k < n; ++k) {
      auto [u, v] = random_pair(p, 1 + static_cast<std::size_t>(k % 9), rng);
      const bool eq = equal_monoid(p, u, v);
      equal_pairs += eq;
      CAPTURE(e, r, to_string(u), to_string(v));
      REQUIRE(eq == (normal_form(g, u) == normal_form(g, v)));
    }
    CHECK(equal_pairs >= n / 3);
  }
}

TEST_CASE("height is invariant under the relations", "[properties]") {
  for (auto [e, r] : shapes) {
    auto p = build_eer(e, r);
    std::mt19937_64 rng(17 + static_cast<std::uint64_t>(e * r));
    for (int k = 0; k < cases; ++k) {
      auto w = testing::random_word(p, 1 + static_cast<std::size_t>(k % 12), rng);
      auto v = testing::random_rewrite(p, w, 6, rng);
      REQUIRE(height(w) == height(v));
    }
  }
}

TEST_CASE("reversing to the empty word is sound", "[properties]") {
  // Short words so that full equivalence classes stay small.
  for (auto [e, r] : shapes) {
    auto p = build_eer(e, r);
    std::mt19937_64 rng(31 + static_cast<std::uint64_t>(e * 7 + r));
    int reversed_empty = 0;
    for (int k = 0; k < cases; ++k) {
      auto [u, v] = random_pair(p, 1 + static_cast<std::size_t>(k % 5), rng);
      bool empty = right_reverse(p, concat(inverse(u), to_signed(v))).empty();
      reversed_empty += empty;
      CAPTURE(e, r, to_string(u), to_string(v));
      REQUIRE(empty == testing::equivalent_by_rewriting(p, u, v));
    }
    CHECK(reversed_empty > 0);
  }
}

TEST_CASE("equal words reverse to the empty word on both sides", "[properties]") {
  for (auto [e, r] : shapes) {
    auto p = build_eer(e, r);
    auto mirror = reverse_presentation(p);
    std::mt19937_64 rng(53 + static_cast<std::uint64_t>(e * 11 + r));
    for (int k = 0; k < cases; ++k) {
      auto u = testing::random_word(p, 1 + static_cast<std::size_t>(k % 12), rng);
      auto v = testing::random_rewrite(p, u, 10, rng);
      CAPTURE(e, r, to_string(u), to_string(v));
      REQUIRE(right_reverse(p, concat(inverse(u), to_signed(v))).empty());
      REQUIRE(left_reverse(mirror, concat(to_signed(u), inverse(v))).empty());
    }
  }
}

TEST_CASE("reversing output represents the same fraction", "[properties]") {
  // u^-1 v reverses to P N^-1 with u P = v N in the monoid.
  for (auto [e, r] : shapes) {
    auto p = build_eer(e, r);
    std::mt19937_64 rng(71 + static_cast<std::uint64_t>(e * 13 + r));
    for (int k = 0; k < cases; ++k) {
      auto u = testing::random_word(p, 1 + static_cast<std::size_t>(k % 4), rng);
      auto v = testing::random_word(p, 1 + static_cast<std::size_t>((k / 4) % 4), rng);
      auto res = right_reverse(p, concat(inverse(u), to_signed(v)));
      CAPTURE(e, r, to_string(u), to_string(v));
      REQUIRE(equal_monoid(p, concat(u, res.positive), concat(v, res.negative)));
    }
  }
}
