#include "doctest.h"

#include "syntax.hpp"
#include "typing.hpp"

using namespace pdlmt;

namespace {
Signature sig = Signature::defaults();
ParseContext ctx{&sig, nullptr, false};
std::string rt(const std::string& s) { return render(parse_term(s, ctx)); }
}  // namespace

TEST_CASE("round trip of operational terms") {
  CHECK(rt("a ;3 (b+)") == "a ;3 (b+)");
  CHECK(rt("a+") == "a+");
  CHECK(rt("a ;1 b") == "a ;1 b");
  CHECK(rt("p -> (q & r)") == "p -> (q & r)");
}

TEST_CASE("latex sequent") {
  CHECK(render(parse_sequent("p |- p", ctx), Format::Latex) == "p \\vdash p");
}
