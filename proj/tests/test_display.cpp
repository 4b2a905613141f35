#include "doctest.h"

#include <unordered_set>

#include "corpus.hpp"
#include "cutred.hpp"
#include "simulate.hpp"

using namespace pdlmt;

namespace {

std::vector<std::pair<std::string, ProofPtr>> corpus_proofs() {
  std::vector<std::pair<std::string, ProofPtr>> out;
  for (const auto& id : corpus::axiom_ids()) out.emplace_back(id, corpus::derive(id));
  for (const auto& id : corpus::lemma_ids())
    for (int n = 1; n <= 6; ++n) out.emplace_back(id + "/" + std::to_string(n), corpus::lemma(id, n));
  return out;
}

}  // namespace

TEST_CASE("every substructure of every corpus sequent can be displayed") {
  long attempts = 0, failures = 0;
  std::unordered_set<Sequent, SequentHash, SequentEq> seen;
  for (const auto& [name, p] : corpus_proofs()) {
    for_each_sequent(p, 6, [&](const Sequent& s) {
      if (!seen.insert(s).second) return;
      for (const auto& e : substructures(s)) {
        if (e.path.size() == 1) continue;  // already a whole side
        ++attempts;
        auto r = display(s, e.path, 64);
        if (!r.found) {
          ++failures;
          MESSAGE(name << ": " << render(s) << " at " << path_string(e.path));
          continue;
        }
        // The displayed side holds exactly the chosen substructure.
        const Sequent& last = r.chain.empty() ? s : r.chain.back().result;
        bool shown = e.pos == Pos::Ant ? equal(last.ant, e.term) : equal(last.suc, e.term);
        if (!shown) ++failures;
      }
    });
  }
  CHECK(attempts > 1000);
  CHECK(failures == 0);
}

TEST_CASE("display rejects paths outside the sequent") {
  Signature sig = Signature::defaults();
  ParseContext ctx{&sig, nullptr, false};
  auto s = parse_sequent("p , q |- r", ctx);
  CHECK_THROWS_AS(display(s, {2}, 8), Error);
  CHECK_THROWS_AS(display(s, {0, 3}, 8), Error);
  auto shallow = display(s, {0, 1}, 0);
  CHECK_FALSE(shallow.found);
}

TEST_CASE("every accepted proof is type-uniform") {
  long sequents = 0, bad = 0;
  auto visit = [&](const ProofPtr& p, int bound) {
    for_each_sequent(p, bound, [&](const Sequent& s) {
      ++sequents;
      if (!is_type_uniform(s)) ++bad;
    });
  };
  for (const auto& [name, p] : corpus_proofs()) {
    REQUIRE(check(p, 6).ok);
    visit(p, 6);
  }
  for (std::string f : {"p & q", "a wtri1 p", "(a+) fbox0 p", "a+", "p ?1"}) {
    Signature sig = Signature::defaults();
    ParseContext ctx{&sig, nullptr, false};
    Term t = parse_term(f, ctx);
    sort_of(t);
    auto q = reduce(principal_cut_fixture(t), 10);
    REQUIRE(check(q, 6).ok);
    visit(q, 6);
  }
  for (const auto& s : simulate_derived(32)) visit(s.proof, 3);
  CHECK(sequents > 1000);
  CHECK(bad == 0);
}
