#include "doctest.h"

#include <map>
#include <random>

#include "corpus.hpp"

using namespace pdlmt;

namespace {

Signature sig = Signature::defaults();
ParseContext ctx{&sig, nullptr, false};
Sequent S(const std::string& text) { return parse_sequent(text, ctx); }

// End-sequents written out by hand, independently of the translation.
const std::map<std::string, std::string> kWritten = {
    {"K", "a fbox1 (p -> q) |- (a fbox1 p) -> (a fbox1 q)"},
    {"BoxChoice_LR", "(a cup1 b) fbox1 p |- (a fbox1 p) & (b fbox1 p)"},
    {"BoxChoice_RL", "(a fbox1 p) & (b fbox1 p) |- (a cup1 b) fbox1 p"},
    {"BoxComposition_LR", "(a ;1 b) fbox1 p |- a fbox1 (b fbox1 p)"},
    {"BoxComposition_RL", "a fbox1 (b fbox1 p) |- (a ;1 b) fbox1 p"},
    {"BoxTest_LR", "(p ?1) fbox1 q |- p -> q"},
    {"BoxTest_RL", "p -> q |- (p ?1) fbox1 q"},
    {"BoxDistributivity_LR", "a fbox1 (p & q) |- (a fbox1 p) & (a fbox1 q)"},
    {"BoxDistributivity_RL", "(a fbox1 p) & (a fbox1 q) |- a fbox1 (p & q)"},
    {"BoxFixpoint_LR", "(a+) fbox0 p |- (a fbox1 p) & (a fbox1 ((a+) fbox0 p))"},
    {"BoxFixpoint_RL", "(a fbox1 p) & (a fbox1 ((a+) fbox0 p)) |- (a+) fbox0 p"},
    {"BoxInduction", "(a fbox1 p) & ((a+) fbox0 (p -> (a fbox1 p))) |- (a+) fbox0 p"},
    {"DiamondChoice_LR", "(a cup1 b) wtri1 p |- (a wtri1 p) | (b wtri1 p)"},
    {"DiamondFixpoint_LR", "(a+) wtri0 p |- (a wtri1 p) | (a wtri1 ((a+) wtri0 p))"},
};

}  // namespace

TEST_CASE("every axiom derivation checks and ends in its translation") {
  for (const auto& id : corpus::axiom_ids()) {
    CAPTURE(id);
    auto p = corpus::derive(id);
    auto v = check(p, 6);
    CHECK_MESSAGE(v.ok, v.reason);
    REQUIRE(kWritten.count(id));
    CHECK(render(p->conclusion) == render(S(kWritten.at(id))));
  }
}

TEST_CASE("end-sequents are valid on random models") {
  std::mt19937_64 rng(7);
  for (const auto& id : corpus::axiom_ids()) {
    Sequent s = S(kWritten.at(id));
    for (int i = 0; i < 200; ++i) {
      auto m = random_model(rng, 1 + i % 4, sig);
      CHECK(holds(m, s) == Truth::True);
    }
  }
}

TEST_CASE("chain lemma uses one cut per link") {
  for (int n = 1; n <= 6; ++n) {
    auto p = corpus::lemma("chain", n);
    CHECK(check(p, 6).ok);
    CHECK(count_rule(p, "cut_") == n - 1);
  }
}

TEST_CASE("lemma end-sequents for small n") {
  CHECK(render(corpus::lemma("n_to_succ", 1)->conclusion) ==
        "(a fbox1 p) , (a fbox1 (p -> (a fbox1 p))) |- a swbox1 (a swbox1 p)");
  CHECK(render(corpus::lemma("n_to_succ_box", 2)->conclusion) ==
        "(a fbox1 (a fbox1 p)) , (a fbox1 (a fbox1 (p -> (a fbox1 p)))) |- a fbox1 (a fbox1 (a fbox1 p))");
  CHECK(render(corpus::lemma("plus_unfold", 3)->conclusion) == "(a+) fbox0 p |- a fbox1 (a fbox1 (a fbox1 p))");
  CHECK(render(corpus::lemma("plus_chain", 2)->conclusion) ==
        "(a fbox1 p) , ((a+) fbox0 (p -> (a fbox1 p))) |- a swbox1 (a swbox1 p)");
  CHECK(render(corpus::lemma("induction_premise", 3)->conclusion) ==
        "(a ;b1 (a ;b1 a)) sbtri1 ((a fbox1 p) , ((a+) fbox0 (p -> (a fbox1 p)))) |- p");
}

TEST_CASE("renamed atoms") {
  corpus::Params prm;
  prm.alpha = "c";
  prm.A = "r";
  auto p = corpus::derive("BoxFixpoint_RL", prm);
  CHECK(check(p, 6).ok);
  CHECK(render(p->conclusion) == "(c fbox1 r) & (c fbox1 ((c+) fbox0 r)) |- (c+) fbox0 r");
  prm.beta = "r";
  CHECK_THROWS_AS(corpus::derive("K", prm), Error);
  CHECK_THROWS_AS(corpus::derive("NoSuchAxiom"), Error);
}

TEST_CASE("induction script reloads through the family registry") {
  auto p = corpus::derive("BoxInduction");
  std::string text = save_script(p, sig);
  auto q = load_script(text);
  CHECK(check(q, 6).ok);
  CHECK(save_script(q, sig) == text);
}

TEST_CASE("identity derivations for compound formulas") {
  for (std::string f : {"p & (q | r)", "((a+) ;2 b) fbox1 p", "(p ?0) wtri0 q", "top -> bot", "p <- q", "p >- q",
                        "p -< q", "a bbox1 (b btri1 p)"}) {
    CAPTURE(f);
    Term t = parse_term(f, ctx);
    auto p = corpus::identity(t);
    CHECK(check(p, 1).ok);
    CHECK(equal(p->conclusion.ant, t));
    CHECK(equal(p->conclusion.suc, t));
  }
}
