#include <catch_amalgamated.hpp>

#include <set>

#include "eer/garside.hpp"
#include "eer/presentation.hpp"

using namespace eer;

namespace {

Generator t(int i, int e) { return Generator::circle(i, e); }
Generator s(int j) { return Generator::tail(j); }

std::set<std::pair<Word, Word>> relation_keys(const Presentation& p) {
  std::set<std::pair<Word, Word>> out;
  for (const auto& rel : p.relations()) out.insert(std::minmax(rel.lhs, rel.rhs));
  return out;
}

bool has_relation(const Presentation& p, const Word& a, const Word& b) {
  return relation_keys(p).count(std::minmax(a, b)) > 0;
}

}  // namespace

TEST_CASE("generator normalization and order", "[presentation]") {
  CHECK(Generator::circle(-1, 3) == t(2, 3));
  CHECK(Generator::circle(7, 3).index == 1);
  CHECK(t(2, 3) < s(3));
  CHECK(s(3) < s(4));
  CHECK_THROWS_AS(Generator::circle(0, 0), InvalidArgument);
}

TEST_CASE("build_eer(3,3) shape", "[presentation]") {
  auto p = build_eer(3, 3);
  CHECK(p.generators() == Word{t(0, 3), t(1, 3), t(2, 3), s(3)});
  CHECK(p.relations().size() == 6);
  CHECK(p.is_complemented());
  CHECK(p.is_homogeneous());
  CHECK(p.complement_is_total());
  int r3 = 0, r5 = 0;
  for (const auto& rel : p.relations()) {
    if (rel.lhs.size() == 3) ++r3;
    if (rel.lhs.size() == 2) ++r5;
  }
  CHECK(r3 == 3);
  CHECK(r5 == 3);
}

TEST_CASE("build_eer relation count over the parameter grid", "[presentation]") {
  for (int e = 1; e <= 6; ++e)
    for (int r = 2; r <= 6; ++r) {
      auto p = build_eer(e, r);
      const std::size_t n = static_cast<std::size_t>(e + r - 2);
      CAPTURE(e, r);
      CHECK(p.size() == n);
      // Total complement table: one relation per unordered pair of generators.
      CHECK(p.relations().size() == n * (n - 1) / 2);
      // Same number from the relation schema, type by type.
      const int tails = r - 2;
      const int braid = std::max(0, tails - 1);
      const int commute = tails * (tails - 1) / 2 - braid;
      const int r3 = r >= 3 ? e : 0;
      const int r4 = e * std::max(0, r - 3);
      const int r5 = e * (e - 1) / 2;
      CHECK(p.relations().size() == static_cast<std::size_t>(braid + commute + r3 + r4 + r5));
      CHECK(p.is_complemented());
      CHECK(p.is_homogeneous());
      CHECK(p.complement_is_total());
    }
}

TEST_CASE("build_eer rejects bad parameters", "[presentation]") {
  CHECK_THROWS_AS(build_eer(0, 3), InvalidArgument);
  CHECK_THROWS_AS(build_eer(-2, 3), InvalidArgument);
  CHECK_THROWS_AS(build_eer(3, 1), InvalidArgument);
}

TEST_CASE("degenerate cases e = 1 and r = 2", "[presentation]") {
  // (1,3) is the braid presentation of A_2 under t0 -> a1, s3 -> a2.
  auto p = build_eer(1, 3);
  REQUIRE(p.relations().size() == 1);
  auto renamed = [](Generator g) { return g.is_circle() ? Generator::braid_a(1) : Generator::braid_a(2); };
  auto a2 = build_classical_a(2);
  const auto& rel = p.relations().front();
  CHECK(has_relation(a2, map_letters(rel.lhs, renamed), map_letters(rel.rhs, renamed)));

  auto circle_only = build_eer(4, 2);
  CHECK(circle_only.size() == 4);
  for (auto g : circle_only.generators()) CHECK(g.is_circle());
  CHECK(circle_only.relations().size() == 6);
}

TEST_CASE("classical A presentations", "[presentation]") {
  CHECK(build_classical_a(1).relations().empty());
  auto a2 = build_classical_a(2);
  REQUIRE(a2.relations().size() == 1);
  const auto a = Generator::braid_a;
  CHECK(has_relation(a2, {a(1), a(2), a(1)}, {a(2), a(1), a(2)}));
  auto a3 = build_classical_a(3);
  CHECK(a3.relations().size() == 3);
  CHECK(has_relation(a3, {a(1), a(3)}, {a(3), a(1)}));
  CHECK(a3.is_complemented());
  CHECK_THROWS_AS(build_classical_a(0), InvalidArgument);
}

TEST_CASE("classical B presentations", "[presentation]") {
  const auto q = Generator::braid_b;
  CHECK(build_classical_b(1).relations().empty());
  auto b2 = build_classical_b(2);
  REQUIRE(b2.relations().size() == 1);
  CHECK(has_relation(b2, {q(1), q(2), q(1), q(2)}, {q(2), q(1), q(2), q(1)}));
  auto b3 = build_classical_b(3);
  CHECK(b3.relations().size() == 3);
  CHECK(has_relation(b3, {q(2), q(3), q(2)}, {q(3), q(2), q(3)}));
  CHECK(has_relation(b3, {q(1), q(3)}, {q(3), q(1)}));
  CHECK(b3.is_complemented());
  CHECK(b3.is_homogeneous());
  CHECK_THROWS_AS(build_classical_b(0), InvalidArgument);
}

TEST_CASE("complement table of (3,3)", "[presentation]") {
  auto p = build_eer(3, 3);
  auto c = p.complement(t(1, 3), t(0, 3));
  REQUIRE(c);
  CHECK(c->first == Word{t(0, 3)});
  CHECK(c->second == Word{t(2, 3)});
  auto d = p.complement(s(3), t(0, 3));
  REQUIRE(d);
  CHECK(d->first == Word{t(0, 3), s(3)});
  CHECK(d->second == Word{s(3), t(0, 3)});
  CHECK_FALSE(p.complement(s(3), s(3)));
}

TEST_CASE("non-complemented presentations are detected", "[presentation]") {
  const auto a = Generator::braid_a;
  Presentation twice(Family::ClassicalA, std::nullopt, 2, {a(1), a(2)},
                     {{{a(1), a(2)}, {a(2), a(1)}}, {{a(1), a(1)}, {a(2), a(2)}}});
  CHECK_FALSE(twice.is_complemented());
  Presentation same_head(Family::ClassicalA, std::nullopt, 2, {a(1), a(2)}, {{{a(1), a(2)}, {a(1), a(1)}}});
  CHECK_FALSE(same_head.is_complemented());
  Presentation uneven(Family::ClassicalA, std::nullopt, 2, {a(1), a(2)}, {{{a(1), a(2)}, {a(2)}}});
  CHECK_FALSE(uneven.is_homogeneous());
}

TEST_CASE("reverse_presentation", "[presentation]") {
  auto p = build_eer(3, 3);
  auto rev = reverse_presentation(p);
  CHECK(rev.family() == Family::Reversed);
  CHECK(rev.source_family() == Family::EER);
  CHECK(rev.is_complemented());
  // t1 t0 = t0 t2 becomes t0 t1 = t2 t0.
  CHECK(has_relation(rev, {t(0, 3), t(1, 3)}, {t(2, 3), t(0, 3)}));
  auto back = reverse_presentation(rev);
  CHECK(back.family() == Family::EER);
  CHECK(same_relations(back, p));
}

TEST_CASE("rev(P) is P under t_i -> t_{-i}", "[presentation]") {
  for (int e = 1; e <= 6; ++e)
    for (int r = 2; r <= 5; ++r) {
      auto p = build_eer(e, r);
      auto rev = reverse_presentation(p);
      std::set<std::pair<Word, Word>> mapped;
      for (const auto& rel : rev.relations())
        mapped.insert(std::minmax(mirror_circle(rel.lhs, e), mirror_circle(rel.rhs, e)));
      CAPTURE(e, r);
      CHECK(mapped == relation_keys(p));
    }
}

TEST_CASE("apply_down and apply_up", "[presentation]") {
  const int e = 3;
  CHECK(apply_down({t(0, e), s(3), t(2, e)}, e) == Word{t(2, e), s(3), t(1, e)});
  Word w{t(0, e), s(3), t(2, e), s(3), t(1, e)};
  Word x = w;
  for (int k = 0; k < e; ++k) x = apply_down(x, e);
  CHECK(x == w);
  CHECK(apply_up(apply_down(w, e), e) == w);
  CHECK(apply_down(apply_up(w, e), e) == w);
}

TEST_CASE("relations are stable under down", "[presentation]") {
  for (int e = 1; e <= 6; ++e)
    for (int r = 2; r <= 5; ++r) {
      auto p = build_eer(e, r);
      auto keys = relation_keys(p);
      for (const auto& rel : p.relations()) {
        CAPTURE(e, r, to_string(rel.lhs));
        CHECK(keys.count(std::minmax(apply_down(rel.lhs, e), apply_down(rel.rhs, e))) == 1);
        CHECK(keys.count(std::minmax(apply_up(rel.lhs, e), apply_up(rel.rhs, e))) == 1);
      }
    }
}

TEST_CASE("fold", "[presentation]") {
  CHECK(fold({t(4, 8), t(1, 4), s(3)}, 4, 2) == Word{t(0, 2), t(1, 2), s(3)});
  Word w{t(3, 4), s(3), t(1, 4)};
  CHECK(fold(w, 4, 4) == w);
  CHECK_THROWS_AS(fold(w, 4, 3), InvalidArgument);

  // Images of defining relations are equalities in the target monoid.
  for (auto [from, to] : {std::pair{4, 2}, {6, 3}, {6, 2}, {4, 1}, {6, 6}}) {
    auto src = build_eer(from, 4);
    auto dst = build_eer(to, 4);
    for (const auto& rel : src.relations()) {
      CAPTURE(from, to, to_string(rel.lhs));
      CHECK(equal_monoid(dst, fold(rel.lhs, from, to), fold(rel.rhs, from, to)));
    }
  }
  // t2 t1 = t1 t0 at e = 4 folds to t0 t1 = t1 t0, both tau at e = 2.
  auto dst = build_eer(2, 3);
  auto lhs = fold({t(2, 4), t(1, 4)}, 4, 2);
  CHECK(lhs == Word{t(0, 2), t(1, 2)});
  CHECK(equal_monoid(dst, lhs, tau_word(2)));
}

TEST_CASE("alternating_product", "[presentation]") {
  const int e = 3;
  CHECK(alternating_product(t(1, e), t(0, e), 0).empty());
  CHECK(alternating_product(t(1, e), t(0, e), 3) == Word{t(1, e), t(0, e), t(1, e)});
  CHECK(alternating_product(t(1, e), t(0, e), 4) == Word{t(1, e), t(0, e), t(1, e), t(0, e)});
  CHECK_THROWS_AS(alternating_product(t(1, e), t(0, e), -1), InvalidArgument);
}

TEST_CASE("word text format", "[presentation]") {
  auto p = build_eer(3, 4);
  CHECK(parse_word(p, "t0 s3 t2") == Word{t(0, 3), s(3), t(2, 3)});
  CHECK(parse_word(p, "1").empty());
  CHECK(parse_word(p, "  ").empty());
  CHECK(to_string(Word{}) == "1");
  CHECK(to_string(parse_word(p, "s4  t1")) == "s4 t1");
  auto sw = parse_signed_word(p, "-t0 s3");
  REQUIRE(sw.size() == 2);
  CHECK(sw[0].inverse);
  CHECK(to_string(sw) == "-t0 s3");
  CHECK_THROWS_AS(parse_word(p, "t3"), ParseError);
  CHECK_THROWS_AS(parse_word(p, "s2"), ParseError);
  CHECK_THROWS_AS(parse_word(p, "s5"), ParseError);
  CHECK_THROWS_AS(parse_word(p, "-t0"), ParseError);
  CHECK_THROWS_AS(parse_word(p, "x1"), ParseError);
  CHECK_THROWS_AS(parse_word(p, "t"), ParseError);
  CHECK_THROWS_AS(parse_word(p, "t1x"), ParseError);
}

TEST_CASE("presentation text round trip", "[presentation]") {
  for (const auto& p : {build_eer(3, 3), build_eer(1, 2), build_classical_a(3), build_classical_b(3),
                        reverse_presentation(build_eer(4, 4))}) {
    auto text = serialize(p);
    auto back = deserialize_presentation(text);
    CAPTURE(text);
    CHECK(back.family() == p.family());
    CHECK(back.source_family() == p.source_family());
    CHECK(same_relations(back, p));
    CHECK(serialize(back) == text);
  }
  CHECK(serialize(build_eer(3, 3)).rfind("eer 3 3\n", 0) == 0);
  CHECK(serialize(build_classical_b(2)) == "B - 2\nq1 q2 q1 q2 = q2 q1 q2 q1\n");
  CHECK_THROWS_AS(deserialize_presentation("X 3 3\n"), ParseError);
}
