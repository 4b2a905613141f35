#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>

#include "pdlmt/pdlmt.h"

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { pdlmt_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

const char* kModel =
    "atoms: props = p,q ; acts = a\n"
    "worlds: 3\n"
    "a: (0,1) (1,2)\n"
    "p: 1 2\n"
    "q: 2\n";

}  // namespace

TEST_CASE("parse and translate") {
  Str canon, sort;
  CHECK(pdlmt_parse("a wtri p |- q", 0, &canon.s, &sort.s) == PDLMT_OK);
  CHECK(canon.str() == "a wtri1 p |- q");
  CHECK(sort.str() == "FM");
  Str tex;
  CHECK(pdlmt_parse("p |- p", 1, &tex.s, nullptr) == PDLMT_OK);
  CHECK(tex.str() == "p \\vdash p");
  Str t;
  CHECK(pdlmt_translate("<a>p", &t.s) == PDLMT_OK);
  CHECK(t.str() == "a wtri1 p");
  Str u;
  CHECK(pdlmt_translate("atoms: props = r ; acts = c\n[c]r", &u.s) == PDLMT_OK);
  CHECK(u.str() == "c fbox1 r");
}

TEST_CASE("errors carry a status and a message") {
  Str canon;
  CHECK(pdlmt_parse("p |-", 0, &canon.s, nullptr) == PDLMT_E_PARSE);
  CHECK(std::string(pdlmt_last_error()).size() > 0);
  CHECK(pdlmt_parse("p |- a", 0, &canon.s, nullptr) == PDLMT_E_TYPE_MISMATCH);
  CHECK(pdlmt_parse("p , a |- q", 0, &canon.s, nullptr) == PDLMT_E_SORT);
  CHECK(pdlmt_parse(nullptr, 0, &canon.s, nullptr) == PDLMT_E_INVALID_ARG);
  pdlmt_proof* p = nullptr;
  CHECK(pdlmt_proof_derive("Nope", 0, &p) == PDLMT_E_UNKNOWN_RULE);
  CHECK(p == nullptr);
  CHECK(pdlmt_proof_derive("chain", 0, &p) == PDLMT_E_INVALID_ARG);
  CHECK(pdlmt_proof_load("not json", &p) == PDLMT_E_PARSE);
  CHECK(std::string(pdlmt_status_name(PDLMT_E_DISPLAY)) == "display error");
  // A successful call clears the message.
  Str ok;
  CHECK(pdlmt_parse("p |- p", 0, &ok.s, nullptr) == PDLMT_OK);
  CHECK(std::string(pdlmt_last_error()).empty());
}

TEST_CASE("derive, save, load and check") {
  pdlmt_proof* p = nullptr;
  REQUIRE(pdlmt_proof_derive("BoxInduction", 0, &p) == PDLMT_OK);
  Str report;
  CHECK(pdlmt_proof_check(p, 6, &report.s) == PDLMT_OK);
  CHECK(report.str() == "ok: (a fbox1 p) & ((a+) fbox0 (p -> (a fbox1 p))) |- (a+) fbox0 p");
  Str script;
  REQUIRE(pdlmt_proof_save(p, &script.s) == PDLMT_OK);
  pdlmt_proof* q = nullptr;
  REQUIRE(pdlmt_proof_load(script.s, &q) == PDLMT_OK);
  Str c1, c2;
  pdlmt_proof_conclusion(p, &c1.s);
  pdlmt_proof_conclusion(q, &c2.s);
  CHECK(c1.str() == c2.str());
  CHECK(pdlmt_proof_check(q, 2, nullptr) == PDLMT_OK);
  Str latex;
  CHECK(pdlmt_proof_render(q, 1, &latex.s) == PDLMT_OK);
  CHECK(latex.str().find("\\begin{prooftree}") != std::string::npos);
  pdlmt_proof_free(p);
  pdlmt_proof_free(q);
}

TEST_CASE("a tampered script is rejected") {
  pdlmt_proof* p = nullptr;
  REQUIRE(pdlmt_proof_derive("K", 0, &p) == PDLMT_OK);
  Str script;
  REQUIRE(pdlmt_proof_save(p, &script.s) == PDLMT_OK);
  std::string text = script.str();
  auto at = text.rfind("(a fbox1 p) -> (a fbox1 q)");
  REQUIRE(at != std::string::npos);
  text.replace(at, 26, "(a fbox1 q) -> (a fbox1 p)");
  pdlmt_proof* q = nullptr;
  pdlmt_status st = pdlmt_proof_load(text.c_str(), &q);
  if (st == PDLMT_OK) {
    Str report;
    CHECK(pdlmt_proof_check(q, 6, &report.s) == PDLMT_E_REJECTED);
    CHECK(report.str().rfind("rejected at", 0) == 0);
  } else {
    CHECK(st != PDLMT_E_INTERNAL);
  }
  pdlmt_proof_free(p);
  pdlmt_proof_free(q);
}

TEST_CASE("lemmas and cut counting") {
  for (int n = 1; n <= 6; ++n) {
    pdlmt_proof* p = nullptr;
    REQUIRE(pdlmt_proof_derive("chain", n, &p) == PDLMT_OK);
    int cuts = -1;
    CHECK(pdlmt_proof_count_rule(p, "cut_", &cuts) == PDLMT_OK);
    CHECK(cuts == n - 1);
    CHECK(pdlmt_proof_check(p, 0, nullptr) == PDLMT_OK);
    pdlmt_proof_free(p);
  }
}

TEST_CASE("cut reduction through the interface") {
  pdlmt_proof* p = nullptr;
  REQUIRE(pdlmt_proof_derive("chain", 3, &p) == PDLMT_OK);
  pdlmt_proof* r = nullptr;
  Str report;
  CHECK(pdlmt_proof_cutreduce(p, 50, &r, &report.s) == PDLMT_OK);
  CHECK(pdlmt_proof_check(r, 0, nullptr) == PDLMT_OK);
  Str a, b;
  pdlmt_proof_conclusion(p, &a.s);
  pdlmt_proof_conclusion(r, &b.s);
  CHECK(a.str() == b.str());
  CHECK(pdlmt_proof_cutreduce(p, -1, &r, nullptr) == PDLMT_E_INVALID_ARG);
  pdlmt_proof_free(p);
  pdlmt_proof_free(r);
}

TEST_CASE("model evaluation") {
  pdlmt_model* m = nullptr;
  REQUIRE(pdlmt_model_parse(kModel, &m) == PDLMT_OK);
  pdlmt_truth t;
  CHECK(pdlmt_model_eval(m, "q |- p", &t) == PDLMT_OK);
  CHECK(t == PDLMT_TRUE);
  CHECK(pdlmt_model_eval(m, "p |- q", &t) == PDLMT_OK);
  CHECK(t == PDLMT_FALSE);
  CHECK(pdlmt_model_eval(m, "p |- I", &t) == PDLMT_OK);
  CHECK(t == PDLMT_FALSE);
  CHECK(pdlmt_model_eval(m, "I |- p", &t) == PDLMT_OK);
  CHECK(t == PDLMT_FALSE);
  CHECK(pdlmt_model_eval(m, "p |- a swtri1 q", &t) == PDLMT_OK);
  CHECK(t == PDLMT_UNINTERPRETABLE);
  Str ext;
  CHECK(pdlmt_model_eval_pdl(m, "<a>p", &ext.s) == PDLMT_OK);
  CHECK(ext.str() == "{0 1}");
  Str ext2;
  CHECK(pdlmt_model_eval_pdl(m, "[a+]p", &ext2.s) == PDLMT_OK);
  CHECK(ext2.str() == "{0 1 2}");
  CHECK(pdlmt_model_eval(m, "r |- p", &t) == PDLMT_E_PARSE);
  pdlmt_model_free(m);
  CHECK(pdlmt_model_parse("worlds: 0\n", &m) == PDLMT_E_PARSE);
}

TEST_CASE("fuzz through the interface") {
  Str report;
  int cx = -1;
  CHECK(pdlmt_fuzz(7, 200, 4, nullptr, &report.s, &cx) == PDLMT_OK);
  CHECK(cx == 0);
  CHECK(report.str().find("0 counterexamples") != std::string::npos);
  Str bad;
  CHECK(pdlmt_fuzz(1, 1000, 4, "abs4_mutant", &bad.s, &cx) == PDLMT_E_REJECTED);
  CHECK(cx > 0);
  CHECK(pdlmt_fuzz(1, 10, 4, "nope", nullptr, &cx) == PDLMT_E_UNKNOWN_RULE);
}

TEST_CASE("display, rules and audit") {
  Str out;
  CHECK(pdlmt_display("p , q |- r", "0.1", 64, &out.s) == PDLMT_OK);
  CHECK(out.str() == "p , q |- r\ndp_comma_gt_L: q |- p > r\n");
  Str none;
  CHECK(pdlmt_display("p , q |- r", "0.7", 64, &none.s) == PDLMT_E_INVALID_ARG);
  Str rules;
  CHECK(pdlmt_rules_dump(&rules.s) == PDLMT_OK);
  CHECK(rules.str().find("[derived]") != std::string::npos);
  Str audit;
  int failures = -1;
  CHECK(pdlmt_audit(&audit.s, &failures) == PDLMT_OK);
  CHECK(failures == 0);
  CHECK(audit.str().find("331 schemas audited, 0 failing") != std::string::npos);
  CHECK(audit.str().find("40 derived rules simulated, 0 failing") != std::string::npos);
}

TEST_CASE("omega bound from the environment") {
  unsetenv("PDLMT_OMEGA_BOUND");
  CHECK(pdlmt_default_omega_bound() == 6);
  setenv("PDLMT_OMEGA_BOUND", "3", 1);
  CHECK(pdlmt_default_omega_bound() == 3);
  setenv("PDLMT_OMEGA_BOUND", "x", 1);
  CHECK(pdlmt_default_omega_bound() == 6);
  unsetenv("PDLMT_OMEGA_BOUND");
}
