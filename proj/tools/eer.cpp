// Command-line front end for the eer library.
//
//   eer [--e N] [--r N] [--family eer|A|B] [--n N] [--format text|json|dot]
//       [--budget N] <command> [args]
//
// Exit status: 0 on success, 1 on a domain error, 2 on a usage or parse error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "eer/eer.hpp"

namespace {

using nlohmann::json;
using namespace eer;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int e = 3;
  int r = 3;
  std::string family = "eer";
  int n = 3;
  std::string format = "text";
  std::size_t budget = default_budget;
};

Presentation selected(const Options& o) {
  if (o.family == "eer") return build_eer(o.e, o.r);
  if (o.family == "A") return build_classical_a(o.n);
  if (o.family == "B") return build_classical_b(o.n);
  throw UsageError("unknown family '" + o.family + "'");
}

GarsideData garside(const Options& o) {
  if (o.family != "eer") throw UsageError("this command needs --family eer");
  return make_garside(o.e, o.r);
}

bool json_out(const Options& o) { return o.format == "json"; }

void no_dot(const Options& o) {
  if (o.format == "dot") throw UsageError("--format dot is only available for lattice-dot");
}

json word_json(const Word& w) {
  json out = json::array();
  for (auto g : w) out.push_back(to_string(g));
  return out;
}

json coefficients_json(const IntPolynomial& p) {
  json out = json::array();
  for (auto c : p.coefficients()) out.push_back(c);
  return out;
}

json matrix_json(const MonomialMatrix& m) {
  json perm = json::array(), exp = json::array();
  for (auto c : m.permutation()) perm.push_back(c + 1);
  for (auto k : m.exponents()) exp.push_back(k);
  return {{"perm", perm}, {"exp", exp}, {"e", m.e()}};
}

std::string big(const BigInt& x) { return x.str(); }

void emit(const Options& o, const json& j, const std::string& text) {
  no_dot(o);
  if (json_out(o)) std::cout << j.dump(2) << '\n';
  else std::cout << text << '\n';
}

// ---------------------------------------------------------------------------

void cmd_check_complete(const Options& o, bool pruned) {
  auto p = selected(o);
  auto rep = check_completeness(p, pruned, o.budget);
  std::string text = to_string(rep.status) + " (" + std::to_string(rep.triples_checked) + " triples)";
  json j{{"status", to_string(rep.status)}, {"triples_checked", rep.triples_checked}, {"pruned", pruned}};
  if (rep.failing) {
    Word triple(rep.failing->begin(), rep.failing->end());
    text += "\nfailing triple: " + to_string(triple);
    j["failing"] = word_json(triple);
  }
  emit(o, j, text);
}

void cmd_eq(const Options& o, const std::string& a, const std::string& b) {
  auto p = selected(o);
  bool eq = equal_monoid(p, parse_word(p, a), parse_word(p, b), o.budget);
  emit(o, {{"u", a}, {"v", b}, {"equal", eq}}, eq ? "true" : "false");
}

void cmd_group_eq(const Options& o, const std::string& a, const std::string& b) {
  auto p = selected(o);
  bool eq = equal_group(p, parse_signed_word(p, a), parse_signed_word(p, b), o.budget);
  emit(o, {{"u", a}, {"v", b}, {"equal", eq}}, eq ? "true" : "false");
}

void cmd_nf(const Options& o, const std::string& w) {
  auto g = garside(o);
  auto nf = normal_form(g, parse_word(g.presentation, w));
  json factors = json::array();
  for (const auto& s : nf.factors) factors.push_back(word_json(s.word));
  emit(o, {{"delta_power", nf.delta_power}, {"factors", factors}}, to_string(nf));
}

void cmd_lcm(const Options& o, const std::string& a, const std::string& b) {
  auto p = selected(o);
  auto res = lcm_right(p, parse_word(p, a), parse_word(p, b), o.budget);
  emit(o,
       {{"lcm", word_json(res.lcm)},
        {"left_residue", word_json(res.left_residue)},
        {"right_residue", word_json(res.right_residue)}},
       to_string(res.lcm));
}

void cmd_gcd(const Options& o, const std::string& a, const std::string& b) {
  auto p = selected(o);
  auto g = gcd_left(p, parse_word(p, a), parse_word(p, b), o.budget);
  emit(o, {{"gcd", word_json(g)}}, to_string(g));
}

void cmd_simples(const Options& o, const std::string& what) {
  if (what == "count") {
    if (o.family != "eer") throw UsageError("this command needs --family eer");
    auto c = simple_count(o.e, o.r);
    emit(o, {{"e", o.e}, {"r", o.r}, {"count", big(c)}}, big(c));
  } else if (what == "list") {
    auto g = garside(o);
    auto all = simples_closed(g);
    json arr = json::array();
    std::string text;
    for (const auto& s : all) {
      arr.push_back({{"word", word_json(s.word)}, {"tuple", tuple_string(s)}});
      if (!text.empty()) text += '\n';
      text += export_line(s);
    }
    emit(o, arr, text);
  } else if (what == "poincare") {
    if (o.family != "eer") throw UsageError("this command needs --family eer");
    auto poly = poincare_closed(o.e, o.r);
    emit(o, {{"coefficients", coefficients_json(poly)}, {"polynomial", to_string(poly)}}, to_array_string(poly));
  } else if (what == "zeta") {
    auto g = garside(o);
    auto lat = simple_lattice(g);
    auto values = zeta_values(lat, static_cast<int>(g.delta.size()));
    auto poly = interpolate(values);
    json vals = json::array(), nums = json::array();
    for (const auto& v : values) vals.push_back(big(v));
    for (const auto& c : poly.numerators) nums.push_back(big(c));
    emit(o, {{"values", vals}, {"numerators", nums}, {"denominator", big(poly.denominator)}, {"polynomial", to_string(poly)}},
         to_string(poly));
  } else {
    throw UsageError("simples expects count, list, poincare or zeta");
  }
}

void cmd_lattice_dot(const Options& o) {
  auto lat = simple_lattice(garside(o));
  if (!json_out(o)) {
    std::cout << lattice_dot(lat);
    return;
  }
  json nodes = json::array(), edges = json::array();
  for (const auto& s : lat.elements) nodes.push_back(to_string(s.word));
  for (std::size_t i = 0; i < lat.covers.size(); ++i)
    for (auto j : lat.covers[i]) edges.push_back({i, j});
  std::cout << json{{"nodes", nodes}, {"covers", edges}}.dump(2) << '\n';
}

void cmd_project(const Options& o, const std::string& w) {
  auto p = selected(o);
  if (o.family != "eer") throw UsageError("this command needs --family eer");
  auto m = project(parse_signed_word(p, w), o.e, o.r);
  emit(o, matrix_json(m), to_string(m));
}

void cmd_group_order(const Options& o) {
  if (o.family != "eer") throw UsageError("this command needs --family eer");
  auto n = enumerate_group(o.e, o.r).size();
  auto formula = reflection_group_order(o.e, o.r);
  emit(o, {{"order", n}, {"formula", big(formula)}, {"simples", big(simple_count(o.e, o.r))}}, std::to_string(n));
}

void cmd_stats(const Options& o) {
  auto g = garside(o);
  auto s = measure_duality_stats(g);
  if (!(s == duality_stats(o.e, o.r))) throw Error("structural statistics disagree with the table formulas");
  emit(o, {{"atoms", s.atom_count}, {"delta_length", s.delta_length}, {"conj_order", s.conj_order}},
       "atoms " + std::to_string(s.atom_count) + "\ndelta_length " + std::to_string(s.delta_length) +
           "\nconj_order " + std::to_string(s.conj_order));
}

void cmd_embed_b(const Options& o, const std::string& w) {
  if (o.family != "eer") throw UsageError("this command needs --family eer");
  auto b = build_classical_b(o.r - 1);
  auto image = psi_embed(parse_word(b, w), o.e);
  emit(o, {{"image", word_json(image)}}, to_string(image));
}

void cmd_circle(const Options& o, int bound) {
  if (o.family != "eer") throw UsageError("this command needs --family eer");
  auto p = build_eer(o.e, o.r);
  BraidGroup group(p, o.budget);
  auto c = circle_make(group, to_signed(Word{Generator::circle(1, o.e)}), to_signed(Word{Generator::circle(0, o.e)}),
                       bound > 0 ? bound : default_circle_bound(o.e));
  json members = json::object();
  std::string text = "cardinality " + std::to_string(c.cardinality);
  for (int i = 0; i < static_cast<int>(c.cardinality); ++i) {
    const auto& g = c.members.at(i);
    std::string atom;
    for (auto x : p.generators())
      if (group.equal(g, to_signed(Word{x}))) atom = to_string(x);
    members[std::to_string(i)] = {{"fraction", to_string(g)}, {"atom", atom.empty() ? json(nullptr) : json(atom)}};
    text += "\ng" + std::to_string(i) + " = " + to_string(g);
    if (!atom.empty() && atom != to_string(g)) text += " = " + atom;
  }
  emit(o, {{"cardinality", c.cardinality}, {"gamma", to_string(c.gamma)}, {"members", members}}, text);
}

void cmd_reverse(const Options& o, const std::string& w, bool trace, bool left) {
  auto p = selected(o);
  auto word = parse_signed_word(p, w);
  std::vector<TraceStep> steps;
  auto res = left ? left_reverse(reverse_presentation(p), word, o.budget)
                  : right_reverse(p, word, o.budget, trace ? &steps : nullptr);
  SignedWord shown = left ? concat(inverse(res.negative), to_signed(res.positive))
                          : concat(to_signed(res.positive), inverse(res.negative));
  std::string text;
  json j{{"positive", word_json(res.positive)}, {"negative", word_json(res.negative)}, {"steps", res.steps},
         {"result", to_string(shown)}};
  if (trace) {
    json arr = json::array();
    for (const auto& s : steps) {
      text += to_string(s) + '\n';
      arr.push_back(to_string(s));
    }
    j["trace"] = arr;
  }
  text += to_string(shown);
  emit(o, j, text);
}

void cmd_presentation(const Options& o) {
  auto p = selected(o);
  if (!json_out(o)) {
    no_dot(o);
    std::cout << serialize(p);
    return;
  }
  json rels = json::array(), gens = json::array();
  for (auto g : p.generators()) gens.push_back(to_string(g));
  for (const auto& rel : p.relations()) rels.push_back({word_json(rel.lhs), word_json(rel.rhs)});
  std::cout << json{{"family", to_string(p.family())}, {"generators", gens}, {"relations", rels}}.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside structure of the braid monoids B+(e,e,r)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--e", o.e, "circle size e")->check(CLI::Range(1, 64));
  app.add_option("--r", o.r, "rank r")->check(CLI::Range(2, 64));
  app.add_option("--family", o.family, "presentation family")->check(CLI::IsMember({"eer", "A", "B"}));
  app.add_option("--n", o.n, "rank for the A and B families")->check(CLI::Range(1, 64));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--budget", o.budget, "step cap for reversing and enumeration");

  std::function<void()> action;
  std::string a, b;
  auto two_words = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("u", a)->required();
    sub->add_option("v", b)->required();
    sub->callback([&, fn] { action = [&, fn] { fn(o, a, b); }; });
  };
  auto one_word = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("word", a)->required();
    sub->callback([&, fn] { action = [&, fn] { fn(o, a); }; });
  };
  auto no_args = [&](const char* name, const char* help, auto fn) {
    app.add_subcommand(name, help)->fallthrough()->callback([&, fn] { action = [&, fn] { fn(o); }; });
  };

  bool pruned = false;
  auto* check = app.add_subcommand("check-complete", "cube condition on all generator triples")->fallthrough();
  check->add_flag("--pruned", pruned, "skip triples with a repeated letter");
  check->callback([&] { action = [&] { cmd_check_complete(o, pruned); }; });

  two_words("eq", "equality in the monoid", cmd_eq);
  two_words("group-eq", "equality in the group of fractions", cmd_group_eq);
  one_word("nf", "greedy normal form", cmd_nf);
  two_words("lcm", "right lcm", cmd_lcm);
  two_words("gcd", "left gcd", cmd_gcd);

  auto* simples = app.add_subcommand("simples", "simple elements")->fallthrough();
  simples->add_option("what", a, "count | list | poincare | zeta")
      ->required()
      ->check(CLI::IsMember({"count", "list", "poincare", "zeta"}));
  simples->callback([&] { action = [&] { cmd_simples(o, a); }; });
  no_args("poincare", "Poincare polynomial coefficients", [](const Options& opt) { cmd_simples(opt, "poincare"); });

  no_args("lattice-dot", "lattice of simples as a graph", cmd_lattice_dot);
  one_word("project", "image in G(e,e,r)", cmd_project);
  no_args("group-order", "order of G(e,e,r) by closure", cmd_group_order);
  no_args("stats", "atoms, length of Delta, order of conjugation by Delta", cmd_stats);
  one_word("embed-b", "image of a B_{r-1} word", cmd_embed_b);

  int bound = 0;
  auto* circle = app.add_subcommand("circle", "circle generated by t1, t0")->fallthrough();
  circle->add_option("--bound", bound, "largest index computed");
  circle->callback([&] { action = [&] { cmd_circle(o, bound); }; });

  bool trace = false, left = false;
  auto* rev = app.add_subcommand("reverse", "word reversing of a signed word")->fallthrough();
  rev->add_option("word", a)->required();
  rev->add_flag("--trace", trace, "print each step");
  rev->add_flag("--left", left, "left reversing instead of right");
  rev->callback([&] { action = [&] { cmd_reverse(o, a, trace, left); }; });

  no_args("presentation", "print the presentation", cmd_presentation);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 2;
  }

  try {
    action();
    return 0;
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n' << app.help();
    return 2;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << '\n';
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
