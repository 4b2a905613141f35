#include "doctest.h"

#include "kernel.hpp"

using namespace pdlmt;

namespace {

Signature sig = Signature::defaults();
ParseContext ctx{&sig, nullptr, false};
Sequent S(const char* text) { return parse_sequent(text, ctx); }
Term T(const char* text) { return parse_term(text, ctx); }

ProofPtr id_p(const char* p) { return axiom("Id_p", S((std::string(p) + " |- " + p).c_str())); }
ProofPtr id_pi(const char* a) { return axiom("Id_pi", S((std::string(a) + " |- " + a).c_str())); }

}  // namespace

TEST_CASE("identity and iteration introduction check") {
  auto p = id_p("p");
  CHECK(check(p, 6).ok);
  auto plus = infer("plus_R", {id_pi("a")});
  CHECK(render(plus->conclusion) == "a^op |- a+");
  CHECK(check(plus, 6).ok);
  CHECK_THROWS_AS(axiom("Id_p", S("p & q |- p & q")), Error);
  CHECK_THROWS_AS(infer("plus_R", {id_p("p")}), Error);
}

TEST_CASE("checker rejects a tampered conclusion and reports the path") {
  auto good = infer("plus_R", {id_pi("a")});
  auto bad = std::make_shared<Proof>(*good);
  bad->conclusion = S("a^op |- b+");
  auto v = check(bad, 6);
  CHECK_FALSE(v.ok);
  CHECK(v.code == Errc::BadMatch);
  CHECK(v.path.empty());

  // A bad leaf under a good node: the path leads to it.
  auto leaf = std::make_shared<Proof>(*id_pi("a"));
  leaf->rule = "Id_p";
  auto top = std::make_shared<Proof>(*good);
  top->kids = {leaf};
  v = check(top, 6);
  CHECK_FALSE(v.ok);
  CHECK(v.path == std::vector<int>{0});
}

TEST_CASE("hypotheses are open unless allowed") {
  auto h = hypothesis(S("p |- q"));
  auto w = infer("W1_L", {h}, {{"Y", T("r")}});
  CHECK_FALSE(check(w, 1).ok);
  auto v = check(w, 1, true);
  CHECK(v.ok);
  CHECK(v.open_hyps == 1);
}

TEST_CASE("display of a proposition under a white triangle") {
  Sequent s = S("a swtri1 p |- q");
  auto r = display(s, {0, 1});
  REQUIRE(r.found);
  REQUIRE(!r.chain.empty());
  CHECK(render(r.chain.back().result) == "p |- a sbbox1 q");
}

TEST_CASE("display of an action under oplus") {
  Sequent s = S("a^op |- b^op");
  // D is an arbitrary TACT structure; the example uses b^op.
  auto r = display(s, {0, 0});
  REQUIRE(r.found);
  CHECK(render(r.chain.back().result) == "a |- (b^op)^om");
}

TEST_CASE("display_to extends a proof and the result rechecks") {
  auto p = infer("wtri1_R", {id_pi("a"), id_p("p")});
  CHECK(render(p->conclusion) == "a swtri1 p |- a wtri1 p");
  auto q = display_to(p, S("p |- a sbbox1 (a wtri1 p)"));
  CHECK(check(q, 1).ok);
  CHECK(count_rule(q, "dp_") == 1);
}

TEST_CASE("script round trip preserves the proof") {
  auto p = infer("wtri1_R", {id_pi("a"), id_p("p")});
  p = infer("wtri1_L", {display_to(p, S("a swtri1 p |- a wtri1 p"))});
  std::string text = save_script(p, sig);
  auto q = load_script(text);
  CHECK(equal(q->conclusion, p->conclusion));
  CHECK(check(q, 1).ok);
  CHECK(save_script(q, sig) == text);
  CHECK_THROWS_AS(load_script("{\"format\":\"other\"}\n"), Error);
}

TEST_CASE("latex tree export uses bussproofs commands") {
  auto p = infer("plus_R", {id_pi("a")});
  std::string tex = render_tree(p, Format::Latex);
  CHECK(tex.find("\\begin{prooftree}") == 0);
  CHECK(tex.find("\\UnaryInfC") != std::string::npos);
  CHECK(tex.find("\\RightLabel{\\scriptsize plus\\_R}") != std::string::npos);
}
