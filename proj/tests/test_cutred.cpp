#include "doctest.h"

#include "corpus.hpp"
#include "cutred.hpp"

using namespace pdlmt;

namespace {

Signature sig = Signature::defaults();
ParseContext ctx{&sig, nullptr, false};
Term T(const std::string& text) {
  Term t = parse_term(text, ctx);
  sort_of(t);
  return t;
}
Sequent S(const std::string& text) { return parse_sequent(text, ctx); }

}  // namespace

TEST_CASE("cut of two identity axioms is principal and disappears") {
  auto p = principal_cut_fixture(T("p"));
  CHECK(p->rule == "cut_Fm");
  CHECK(is_principal(p, {}));
  auto q = principal_step(p, {});
  CHECK(q->rule == "Id_p");
  CHECK(render(q->conclusion) == "p |- p");
}

TEST_CASE("top cut leaves the subproof of I |- X") {
  auto p = principal_cut_fixture(T("top"));
  CHECK(render(p->conclusion) == "I |- top");
  auto q = principal_step(p, {});
  CHECK(q->rule == "top_R");
}

TEST_CASE("a cut after weakening is not principal") {
  auto l = infer("W2_L", {corpus::identity(T("p & q"))}, {{"Y", T("r")}});
  auto l2 = display_to(l, S("(p & q) , r |- p & q"));
  auto r = corpus::identity(T("p & q"));
  // Left premise proves (p & q) , r |- p & q, but its last step is a display postulate.
  auto c = infer("cut_Fm", {l2, r});
  CHECK_FALSE(is_principal(c, {}));
  CHECK_THROWS_AS(principal_step(c, {}), Error);
  CHECK_THROWS_AS(is_principal(c, {0}), Error);
}

TEST_CASE("triangle cut splits into an action cut and a formula cut") {
  auto p = principal_cut_fixture(T("a wtri1 p"));
  CHECK(is_principal(p, {}));
  auto q = principal_step(p, {});
  CHECK(check(q, 1).ok);
  CHECK(equal(q->conclusion, p->conclusion));
  auto ranks = cut_ranks(q);
  CHECK(ranks == std::vector<int>{1, 1});
  int act_cuts = count_rule(q, "cut_Act"), fm_cuts = count_rule(q, "cut_Fm");
  CHECK(act_cuts == 1);
  CHECK(fm_cuts == 1);
  CHECK(cuts_strongly_uniform(q));
}

TEST_CASE("nested triangle over atom cuts is cut-free in three steps") {
  CutReport rep;
  auto p = principal_cut_fixture(T("a wtri1 p"));
  auto q = reduce(p, 10, &rep);
  CHECK(rep.steps == 3);
  CHECK(rep.residual == 0);
  CHECK_FALSE(rep.fuel_exhausted);
  CHECK(count_rule(q, "cut_") == 0);
  CHECK(check(q, 1).ok);
}

TEST_CASE("fuel zero leaves the proof unchanged") {
  CutReport rep;
  auto p = principal_cut_fixture(T("a fbox1 p"));
  auto q = reduce(p, 0, &rep);
  CHECK(q == p);
  CHECK(rep.fuel_exhausted);
  CHECK(rep.steps == 0);
}

TEST_CASE("every reduction shape preserves the end-sequent and lowers the rank") {
  for (std::string f : {"p", "a", "top", "bot", "p & q", "p | q", "p -> q", "a wtri1 p", "(a+) wtri0 p",
                        "a btri1 p", "(a+) btri0 p", "a fbox1 p", "(a+) fbox0 p", "a bbox1 p", "(a+) bbox0 p",
                        "p ?1", "p ?0", "a+", "(a+)-"}) {
    CAPTURE(f);
    auto p = principal_cut_fixture(T(f));
    REQUIRE(is_principal(p, {}));
    auto before = cut_ranks(p);
    auto q = principal_step(p, {});
    CHECK(equal(q->conclusion, p->conclusion));
    CHECK(check(q, 1).ok);
    CHECK(rank_below(cut_ranks(q), before));
    CHECK(cuts_strongly_uniform(q));
  }
}

TEST_CASE("multiset ordering") {
  CHECK(rank_below({2, 1, 1}, {3}));
  CHECK(rank_below({}, {1}));
  CHECK_FALSE(rank_below({3}, {3}));
  CHECK_FALSE(rank_below({4}, {3, 3}));
  CHECK(rank_below({3, 2}, {3, 3}));
}

TEST_CASE("unsupported principal pair is reported") {
  auto p = principal_cut_fixture(T("p <- q"));
  CHECK(is_principal(p, {}));
  CHECK_THROWS_AS(principal_step(p, {}), Error);
}
