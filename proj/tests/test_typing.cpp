#include "doctest.h"

#include <functional>

#include "syntax.hpp"
#include "typing.hpp"

using namespace pdlmt;

namespace {

Signature sig = Signature::defaults();
ParseContext strict{&sig, nullptr, false};
ParseContext loose{&sig, nullptr, true};
Term T(const char* text) { return parse_term(text, strict); }
Sequent S(const char* text) { return parse_sequent(text, strict); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST_CASE("sorts of operational terms") {
  CHECK(sort_of(T("p")) == Sort::Fm);
  CHECK(sort_of(T("a")) == Sort::Act);
  CHECK(sort_of(T("a+")) == Sort::TAct);
  CHECK(sort_of(T("(a+)-")) == Sort::Act);
  CHECK(sort_of(T("p ?1")) == Sort::Act);
  CHECK(sort_of(T("p ?0")) == Sort::TAct);
  CHECK(sort_of(T("a ;1 b")) == Sort::Act);
  CHECK(sort_of(T("(a+) ;4 (b+)")) == Sort::Act);
  CHECK(sort_of(T("a wtri1 p")) == Sort::Fm);
  CHECK(sort_of(T("(a+) fbox0 p")) == Sort::Fm);
}

TEST_CASE("sorts of structures") {
  CHECK(sort_of(T("p , q")) == Sort::FM);
  CHECK(sort_of(T("a swtri1 p")) == Sort::FM);
  CHECK(sort_of(T("a ;b1 b")) == Sort::ACT);
  CHECK(sort_of(T("a^op")) == Sort::TACT);
  CHECK(sort_of(T("(a^op)^om")) == Sort::ACT);
  CHECK(sort_of(T("I")) == Sort::FM);
}

TEST_CASE("ill-sorted terms name the offending node") {
  CHECK(code_of([] { sort_of(T("p , a")); }) == Errc::Sort);
  CHECK(code_of([] { sort_of(T("a swtri0 p")); }) == Errc::Sort);
  CHECK(code_of([] { sort_of(T("a ;b4 b")); }) == Errc::Sort);
  try {
    sort_of(T("p , (q , a)"));
    FAIL("expected a sort error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("type-uniform sequents") {
  CHECK(check_sequent(S("a swtri1 p |- q")).sort == Sort::FM);
  CHECK(check_sequent(S("a |- a ;b1 b")).sort == Sort::ACT);
  CHECK(check_sequent(S("a^op |- a+")).sort == Sort::TACT);
  CHECK(is_type_uniform(S("p |- q")));
  CHECK_FALSE(is_type_uniform(S("p |- a")));
  CHECK_FALSE(is_type_uniform(S("p , a |- q")));
  CHECK(code_of([] { check_sequent(S("p |- a")); }) == Errc::TypeMismatch);
}

TEST_CASE("unindexed families are resolved from the child sorts") {
  CHECK(render(parse_term("a wtri p", loose)) == "a wtri1 p");
  CHECK(render(parse_term("(a+) fbox p", loose)) == "(a+) fbox0 p");
  CHECK(render(parse_term("a ; (b+)", loose)) == "a ;3 (b+)");
  CHECK_THROWS_AS(parse_term("a wtri p", strict), Error);
  CHECK_THROWS_AS(parse_term("x & p", strict), Error);
}

TEST_CASE("paths, positions and replacement") {
  Sequent s = S("(a swtri1 p) , q |- r > s");
  CHECK(path_string({}) == "root");
  CHECK(path_string({0, 1}) == "0.1");
  CHECK(parse_path("0.1") == Path{0, 1});
  CHECK_THROWS_AS(parse_path("0.x"), Error);
  CHECK(render(subterm_at(s, {0, 0, 1})) == "p");
  CHECK(position_at(s, {0, 0, 1}) == Pos::Ant);
  CHECK(position_at(s, {1, 0}) == Pos::Ant);
  CHECK(position_at(s, {1, 1}) == Pos::Suc);
  CHECK(render(replace_at(s, {0, 1}, T("p & q"))) == "(a swtri1 p) , (p & q) |- r > s");
  CHECK_THROWS_AS(subterm_at(s, {0, 5}), Error);
}

TEST_CASE("substructure enumeration stops at operational leaves") {
  auto subs = substructures(S("(a swtri1 (p & q)) , q |- r"));
  // root antecedent, the triangle, a, p & q, q, then the succedent r
  CHECK(subs.size() == 6);
  for (const auto& e : subs) CHECK(e.term->sort != Sort::Bad);
}

TEST_CASE("operational readings depend on the position") {
  auto ant = operational_reading(T("p , q"), Pos::Ant);
  REQUIRE(ant.ok());
  CHECK(render(ant.term) == "p & q");
  auto suc = operational_reading(T("p , q"), Pos::Suc);
  REQUIRE(suc.ok());
  CHECK(render(suc.term) == "p | q");
  auto tri = operational_reading(T("a swtri1 p"), Pos::Ant);
  REQUIRE(tri.ok());
  CHECK(render(tri.term) == "a wtri1 p");
  CHECK_FALSE(operational_reading(T("a swtri1 p"), Pos::Suc).ok());
  auto gt = operational_reading(T("p > q"), Pos::Suc);
  REQUIRE(gt.ok());
  CHECK(render(gt.term) == "p -> q");
}
