#include "doctest.h"

#include <set>

#include "fuzz.hpp"
#include "rules.hpp"

using namespace pdlmt;

TEST_CASE("catalogue composition") {
  int derived = 0, display = 0, virt = 0, cuts = 0, omega = 0;
  std::set<std::string> ids;
  for (const auto& r : catalog()) {
    derived += r.derived;
    display += r.display;
    virt += r.is_virtual;
    cuts += r.is_cut;
    omega += r.is_omega();
    CHECK(ids.insert(r.id).second);
    if (!r.inverse.empty()) CHECK(schema(r.inverse).inverse == r.id);
  }
  CHECK(catalog().size() == 331);
  CHECK(derived == 40);
  CHECK(display == 62);
  CHECK(virt == 18);
  CHECK(cuts == 3);
  CHECK(omega == 6);
  CHECK_THROWS_AS(schema("no_such_rule"), Error);
}

TEST_CASE("every schema passes its conditions") {
  for (const auto& r : catalog()) {
    auto rep = audit_schema(r);
    CAPTURE(r.id);
    CHECK(rep.all_pass());
    std::vector<std::string> names;
    for (const auto& [n, ok] : rep.checks) names.push_back(n);
    std::vector<std::string> want{"wf", "C1", "C2", "C'2", "C3", "C4", "C5"};
    if (r.is_cut) want.push_back("C10");
    CHECK(names == want);
  }
}

TEST_CASE("a schema that drops premise material fails C1") {
  Schema bad = schema("E_L");
  bad.id = "drop";
  bad.conclusion.ant = bad.premises[0].ant->kids[1];
  auto rep = audit_schema(bad);
  CHECK_FALSE(rep.all_pass());
  bool c1 = true;
  for (const auto& [n, ok] : rep.checks)
    if (n == "C1") c1 = ok;
  CHECK_FALSE(c1);
}

TEST_CASE("matching treats target metavariables as constants") {
  const Schema& r = schema("E_L");
  Signature sig = Signature::defaults();
  ParseContext ctx{&sig, nullptr, false};
  auto ms = match_conclusion(r, parse_sequent("p , q |- r", ctx));
  REQUIRE(ms.size() == 1);
  CHECK(render(ms[0].at("X")) == "p");
  CHECK(render(ms[0].at("Y")) == "q");
  CHECK(render(instantiate(r.premises[0], ms[0])) == "q , p |- r");
  CHECK(match_conclusion(r, parse_sequent("p |- r", ctx)).empty());
  CHECK(render(power(parse_term("a", ctx), 3)) == "a ;b1 (a ;b1 a)");
}

TEST_CASE("omega members") {
  const Schema& r = schema("omega_btri");
  Subst s;
  for (const auto& [name, d] : r.metas) s[name] = mk_meta(name, d.sort, d.atom_only);
  CHECK(render(omega_member(r, s, 2)) == "($Pi ;b1 $Pi) sbtri1 $X |- $Y");
  CHECK(premises_of(r, s, 4).size() == 4);
  CHECK_THROWS_AS(premises_of(r, s, 0), Error);
}

TEST_CASE("fuzzing the catalogue finds no counterexample") {
  FuzzConfig cfg;
  cfg.seed = 1;
  cfg.trials = 1000;
  cfg.max_worlds = 4;
  auto rep = fuzz(cfg);
  CHECK(rep.trials == 1000);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.checked + rep.vacuous + rep.skipped == rep.trials);
  CHECK(rep.checked > 800);
  CHECK(format_report(rep).find("0 counterexamples") != std::string::npos);
}

TEST_CASE("the abs4 mutant is caught") {
  FuzzConfig cfg;
  cfg.trials = 1000;
  auto rep = fuzz(cfg, {&abs4_mutant()});
  REQUIRE_FALSE(rep.counterexamples.empty());
  CHECK(rep.counterexamples[0].schema == "abs4_mutant");
  auto sound = fuzz(cfg, {&schema("abs4")});
  CHECK(sound.counterexamples.empty());
}

TEST_CASE("fuzz configuration errors") {
  FuzzConfig cfg;
  cfg.schema = "dp_wtri0_vbleft0";
  CHECK_THROWS_AS(fuzz(cfg), Error);
  cfg.schema = "nope";
  CHECK_THROWS_AS(fuzz(cfg), Error);
  cfg.schema.clear();
  cfg.max_worlds = 9;
  CHECK_THROWS_AS(fuzz(cfg), Error);
}

TEST_CASE("fuzzing is deterministic for a seed") {
  FuzzConfig cfg;
  cfg.seed = 42;
  cfg.trials = 300;
  CHECK(format_report(fuzz(cfg)) == format_report(fuzz(cfg)));
}
