#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eer/error.hpp"
#include "eer/word.hpp"

namespace eer {

enum class Family { EER, ClassicalA, ClassicalB, Reversed };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::EER: return "eer";
    case Family::ClassicalA: return "A";
    case Family::ClassicalB: return "B";
    case Family::Reversed: return "rev";
  }
  return "?";
}

struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// A positive presentation with its right-complement table.
//
// The table maps an ordered pair (x, y), x != y, to the word u such that
// x u = y v is the relation headed by {x, y}. Presentations that are not
// complemented can still be built (check_completeness reports them); the
// first relation for a head pair wins in the table.
class Presentation {
 public:
  using Rank = std::uint16_t;

  Presentation(Family family, std::optional<int> e, int r, std::vector<Generator> generators,
               std::vector<Relation> relations, Family source = Family::EER)
      : family_(family),
        source_(family == Family::Reversed ? source : family),
        e_(e),
        r_(r),
        generators_(std::move(generators)),
        relations_(std::move(relations)) {
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    const std::size_t n = generators_.size();
    table_.assign(n * n, std::nullopt);
    for (const auto& rel : relations_) {
      if (rel.lhs.size() != rel.rhs.size()) homogeneous_ = false;
      if (rel.lhs.empty() || rel.rhs.empty()) {
        complemented_ = false;
        continue;
      }
      for (auto g : rel.lhs) require_member(g);
      for (auto g : rel.rhs) require_member(g);
      const Rank x = *rank(rel.lhs.front());
      const Rank y = *rank(rel.rhs.front());
      if (x == y) {
        complemented_ = false;
        continue;
      }
      auto& xy = table_[x * n + y];
      auto& yx = table_[y * n + x];
      if (xy || yx) {
        complemented_ = false;
        continue;
      }
      xy = to_ranks(Word(rel.lhs.begin() + 1, rel.lhs.end()));
      yx = to_ranks(Word(rel.rhs.begin() + 1, rel.rhs.end()));
    }
  }

  Family family() const { return family_; }
  // For a reversed presentation, the family it was reversed from.
  Family source_family() const { return source_; }
  std::optional<int> e() const { return e_; }
  int r() const { return r_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t size() const { return generators_.size(); }

  bool is_complemented() const { return complemented_; }
  bool is_homogeneous() const { return homogeneous_; }

  std::optional<Rank> rank(Generator g) const {
    auto it = std::lower_bound(generators_.begin(), generators_.end(), g);
    if (it == generators_.end() || *it != g) return std::nullopt;
    return static_cast<Rank>(it - generators_.begin());
  }
  bool contains(Generator g) const { return rank(g).has_value(); }
  Generator generator(Rank k) const { return generators_.at(k); }

  // x\y in rank form, or nullptr when no relation is headed by {x, y}.
  const std::vector<Rank>* complement_ranks(Rank x, Rank y) const {
    const auto& slot = table_[x * generators_.size() + y];
    return slot ? &*slot : nullptr;
  }

  // (x\y, y\x) for distinct generators, when defined.
  std::optional<std::pair<Word, Word>> complement(Generator x, Generator y) const {
    auto rx = rank(x), ry = rank(y);
    if (!rx || !ry || *rx == *ry) return std::nullopt;
    const auto* u = complement_ranks(*rx, *ry);
    const auto* v = complement_ranks(*ry, *rx);
    if (!u || !v) return std::nullopt;
    return std::make_pair(from_ranks(*u), from_ranks(*v));
  }

  bool complement_is_total() const {
    const std::size_t n = generators_.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && !table_[x * n + y]) return false;
    return true;
  }

  std::vector<Rank> to_ranks(const Word& w) const {
    std::vector<Rank> out;
    out.reserve(w.size());
    for (auto g : w) {
      auto k = rank(g);
      if (!k) throw InvalidArgument("generator " + to_string(g) + " not in presentation");
      out.push_back(*k);
    }
    return out;
  }

  Word from_ranks(const std::vector<Rank>& w) const {
    Word out;
    out.reserve(w.size());
    for (auto k : w) out.push_back(generators_[k]);
    return out;
  }

  void require_member(Generator g) const {
    if (!contains(g)) throw InvalidArgument("generator " + to_string(g) + " not in presentation");
  }

 private:
  Family family_;
  Family source_;
  std::optional<int> e_;
  int r_;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
  std::vector<std::optional<std::vector<Rank>>> table_;
  bool complemented_ = true;
  bool homogeneous_ = true;
};

// P+(e,e,r): circle t_0..t_{e-1}, tail s_3..s_r. The circle relations
// t_i t_{i-1} = t_j t_{j-1} are stored once per unordered pair {i, j},
// oriented with i < j.
inline Presentation build_eer(int e, int r) {
  if (e < 1) throw InvalidArgument("build_eer: e must be >= 1");
  if (r < 2) throw InvalidArgument("build_eer: r must be >= 2");
  std::vector<Generator> gens;
  for (int i = 0; i < e; ++i) gens.push_back(Generator::circle(i, e));
  for (int j = 3; j <= r; ++j) gens.push_back(Generator::tail(j));

  std::vector<Relation> rels;
  const auto s = Generator::tail;
  auto t = [e](int i) { return Generator::circle(i, e); };
  for (int i = 3; i < r; ++i)  // braid relations along the tail
    rels.push_back({{s(i), s(i + 1), s(i)}, {s(i + 1), s(i), s(i + 1)}});
  for (int i = 3; i <= r; ++i)  // distant tail letters commute
    for (int j = i + 2; j <= r; ++j) rels.push_back({{s(i), s(j)}, {s(j), s(i)}});
  if (r >= 3)
    for (int i = 0; i < e; ++i)  // s3 braids with every t_i
      rels.push_back({{s(3), t(i), s(3)}, {t(i), s(3), t(i)}});
  for (int j = 4; j <= r; ++j)  // s_j, j >= 4, commutes with every t_i
    for (int i = 0; i < e; ++i) rels.push_back({{s(j), t(i)}, {t(i), s(j)}});
  for (int i = 0; i < e; ++i)  // circle relations
    for (int j = i + 1; j < e; ++j) rels.push_back({{t(i), t(i - 1)}, {t(j), t(j - 1)}});
  return Presentation(Family::EER, e, r, std::move(gens), std::move(rels));
}

// Artin presentation of B+(A_n) on a_1..a_n.
inline Presentation build_classical_a(int n) {
  if (n < 1) throw InvalidArgument("build_classical_a: n must be >= 1");
  std::vector<Generator> gens;
  for (int k = 1; k <= n; ++k) gens.push_back(Generator::braid_a(k));
  std::vector<Relation> rels;
  const auto a = Generator::braid_a;
  for (int i = 1; i < n; ++i) rels.push_back({{a(i), a(i + 1), a(i)}, {a(i + 1), a(i), a(i + 1)}});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) rels.push_back({{a(i), a(j)}, {a(j), a(i)}});
  return Presentation(Family::ClassicalA, std::nullopt, n, std::move(gens), std::move(rels));
}

// Artin presentation of B+(B_n) on q_1..q_n; q_1 - q_2 is the edge labelled 4.
inline Presentation build_classical_b(int n) {
  if (n < 1) throw InvalidArgument("build_classical_b: n must be >= 1");
  std::vector<Generator> gens;
  for (int k = 1; k <= n; ++k) gens.push_back(Generator::braid_b(k));
  std::vector<Relation> rels;
  const auto q = Generator::braid_b;
  if (n >= 2)
    rels.push_back({alternating_product(q(1), q(2), 4), alternating_product(q(2), q(1), 4)});
  for (int i = 2; i < n; ++i) rels.push_back({{q(i), q(i + 1), q(i)}, {q(i + 1), q(i), q(i + 1)}});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) rels.push_back({{q(i), q(j)}, {q(j), q(i)}});
  return Presentation(Family::ClassicalB, std::nullopt, n, std::move(gens), std::move(rels));
}

// Same generators, every relation read backwards. Reversing twice gives the
// original relations back, tagged with the original family.
inline Presentation reverse_presentation(const Presentation& p) {
  std::vector<Relation> rels;
  rels.reserve(p.relations().size());
  for (const auto& rel : p.relations()) rels.push_back({reversed(rel.lhs), reversed(rel.rhs)});
  if (p.family() == Family::Reversed)
    return Presentation(p.source_family(), p.e(), p.r(), p.generators(), std::move(rels));
  return Presentation(Family::Reversed, p.e(), p.r(), p.generators(), std::move(rels), p.family());
}

// Unordered comparison of relation sets, each relation taken up to swapping sides.
inline bool same_relations(const Presentation& a, const Presentation& b) {
  auto key = [](const Presentation& p) {
    std::set<std::pair<Word, Word>> out;
    for (const auto& rel : p.relations()) out.insert(std::minmax(rel.lhs, rel.rhs));
    return out;
  };
  return a.generators() == b.generators() && key(a) == key(b);
}

template <class F>
Word map_letters(const Word& w, F&& f) {
  Word out;
  out.reserve(w.size());
  for (auto g : w) out.push_back(f(g));
  return out;
}

template <class F>
SignedWord map_letters(const SignedWord& w, F&& f) {
  SignedWord out;
  out.reserve(w.size());
  for (auto l : w) out.push_back({f(l.gen), l.inverse});
  return out;
}

inline Generator shift_circle(Generator g, int by, int e) {
  return g.is_circle() ? Generator::circle(static_cast<long long>(g.index) + by, e) : g;
}

// Diagram automorphism t_i -> t_{i-1}, s_j fixed.
inline Word apply_down(const Word& w, int e) {
  return map_letters(w, [e](Generator g) { return shift_circle(g, -1, e); });
}

inline Word apply_up(const Word& w, int e) {
  return map_letters(w, [e](Generator g) { return shift_circle(g, 1, e); });
}

// t_i -> t_{-i}, s_j fixed: the isomorphism onto the reversed monoid.
template <class W>
W mirror_circle(const W& w, int e) {
  return map_letters(w, [e](Generator g) {
    return g.is_circle() ? Generator::circle(-static_cast<long long>(g.index), e) : g;
  });
}

// Folding B+(e2,e2,r) -> B+(e1,e1,r): t_j -> t_{j mod e1}.
inline Word fold(const Word& w, int from_e, int to_e) {
  if (to_e < 1 || from_e < 1 || from_e % to_e != 0)
    throw InvalidArgument("fold: target e must divide source e");
  return map_letters(w, [to_e](Generator g) {
    return g.is_circle() ? Generator::circle(g.index, to_e) : g;
  });
}

inline SignedWord parse_signed_word(const Presentation& p, std::string_view text) {
  SignedWord out;
  auto tokens = split_tokens(text);
  if (tokens.size() == 1 && tokens.front() == "1") return out;
  for (const auto& tok : tokens) {
    auto letter = parse_token(tok);
    if (!p.contains(letter.gen)) throw ParseError("generator '" + tok + "' not in presentation");
    out.push_back(letter);
  }
  return out;
}

inline Word parse_word(const Presentation& p, std::string_view text) {
  Word out;
  for (const auto& l : parse_signed_word(p, text)) {
    if (l.inverse) throw ParseError("inverse letter in positive word '" + std::string(text) + "'");
    out.push_back(l.gen);
  }
  return out;
}

// Header `family e r`, then one `lhs = rhs` per line. Classical families
// print `-` for e and their rank n in the r slot; reversed presentations
// print `rev-<source>`.
inline std::string serialize(const Presentation& p) {
  std::ostringstream out;
  if (p.family() == Family::Reversed) out << "rev-" << to_string(p.source_family());
  else out << to_string(p.family());
  out << ' ' << (p.e() ? std::to_string(*p.e()) : std::string("-")) << ' ' << p.r() << '\n';
  for (const auto& rel : p.relations()) out << to_string(rel.lhs) << " = " << to_string(rel.rhs) << '\n';
  return out.str();
}

inline Presentation deserialize_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty presentation text");
  std::istringstream header(line);
  std::string fam, e_text;
  int r = 0;
  if (!(header >> fam >> e_text >> r)) throw ParseError("bad presentation header '" + line + "'");
  bool rev = fam.rfind("rev-", 0) == 0;
  if (rev) fam = fam.substr(4);
  Presentation base = [&] {
    if (fam == "eer") return build_eer(std::stoi(e_text), r);
    if (fam == "A") return build_classical_a(r);
    if (fam == "B") return build_classical_b(r);
    throw ParseError("unknown family '" + fam + "'");
  }();
  std::vector<Relation> rels;
  while (std::getline(in, line)) {
    if (split_tokens(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("relation without '=': " + line);
    rels.push_back({parse_word(base, line.substr(0, eq)), parse_word(base, line.substr(eq + 1))});
  }
  if (rev) return Presentation(Family::Reversed, base.e(), base.r(), base.generators(), std::move(rels), base.family());
  return Presentation(base.family(), base.e(), base.r(), base.generators(), std::move(rels));
}

}  // namespace eer
