// One line per acceptance criterion; exit status 1 when any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "corpus.hpp"
#include "cutred.hpp"
#include "fuzz.hpp"
#include "pdl.hpp"
#include "simulate.hpp"

using namespace pdlmt;

namespace {

// Pinned limits.
constexpr int kOmegaBound = 6;
constexpr double kBoxSeconds = 10.0;
constexpr int kMaxN = 6;
constexpr int kFuzzTrials = 1000;
constexpr int kFuzzWorlds = 4;
constexpr int kPdlFormulas = 500;
constexpr int kPdlDepth = 4;
constexpr int kPdlWorlds = 4;
constexpr int kRelations = 200;
constexpr int kRelWorlds = 6;
constexpr int kAdjunctionWorlds = 4;
constexpr int kCutFuel = 1;
constexpr int kDisplayBudget = 64;
constexpr int kSimulationBudget = 32;

struct Line {
  bool ok;
  std::string detail;
};

std::vector<std::pair<std::string, ProofPtr>> corpus_proofs() {
  std::vector<std::pair<std::string, ProofPtr>> out;
  for (const auto& id : corpus::axiom_ids()) out.emplace_back(id, corpus::derive(id));
  for (const auto& id : corpus::lemma_ids())
    for (int n = 1; n <= kMaxN; ++n) out.emplace_back(id + "/" + std::to_string(n), corpus::lemma(id, n));
  return out;
}

Line box_builders() {
  auto t0 = std::chrono::steady_clock::now();
  int built = 0;
  std::string bad;
  for (const auto& id : corpus::axiom_ids()) {
    if (corpus::is_stretch(id)) continue;
    ++built;
    auto p = corpus::derive(id);
    auto [l, r] = corpus::axiom_sides(id);
    std::string want = render(Sequent{pdl::translate(l), pdl::translate(r)});
    if (!check(p, kOmegaBound).ok || render(p->conclusion) != want) bad += " " + id;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << built << " builders, omega bound " << kOmegaBound << ", " << secs << " s";
  if (!bad.empty()) d << ", failing:" << bad;
  return {built == 12 && bad.empty() && secs < kBoxSeconds, d.str()};
}

Line lemmas() {
  std::string bad;
  for (const auto& id : corpus::lemma_ids())
    for (int n = 1; n <= kMaxN; ++n) {
      auto p = corpus::lemma(id, n);
      if (!check(p, kOmegaBound).ok) bad += " " + id + "/" + std::to_string(n);
      if (id == "chain" && count_rule(p, "cut_") != n - 1) bad += " chain-cuts/" + std::to_string(n);
    }
  return {bad.empty(), std::to_string(corpus::lemma_ids().size()) + " lemma families, n = 1.." +
                           std::to_string(kMaxN) + (bad.empty() ? "" : ", failing:" + bad)};
}

Line fuzzing() {
  FuzzConfig cfg;
  cfg.seed = 1;
  cfg.trials = kFuzzTrials;
  cfg.max_worlds = kFuzzWorlds;
  auto rep = fuzz(cfg);
  auto mut = fuzz(cfg, {&abs4_mutant()});
  std::ostringstream d;
  d << rep.counterexamples.size() << " counterexamples in " << rep.trials << " trials (" << rep.checked
    << " checked, " << rep.vacuous << " vacuous, " << rep.skipped << " skipped); abs4 mutant: "
    << mut.counterexamples.size() << " counterexamples";
  return {rep.trials == kFuzzTrials && rep.counterexamples.empty() && !mut.counterexamples.empty(), d.str()};
}

Line pdl_agreement() {
  Signature sig = Signature::defaults();
  std::mt19937_64 rng(11);
  int bad = 0;
  for (int i = 0; i < kPdlFormulas; ++i) {
    auto f = pdl::random_formula(rng, 1 + i % kPdlDepth, sig);
    auto m = random_model(rng, 1 + i % kPdlWorlds, sig);
    Extension e = interpret(m, pdl::translate(f));
    if (e.kind != Extension::Kind::Worlds || e.bits != pdl::eval(m, f)) ++bad;
  }
  return {bad == 0, std::to_string(kPdlFormulas) + " formulas, " + std::to_string(bad) + " disagreements"};
}

// Brute-force transitive closure: union of R^1..R^k by repeated composition
// over explicit pair lists.
Rel brute_plus(Rel r, int k) {
  std::vector<std::pair<int, int>> base;
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v)
      if (r >> (u * 8 + v) & 1U) base.emplace_back(u, v);
  Rel acc = 0, power = r;
  for (int i = 0; i < k; ++i) {
    acc |= power;
    Rel next = 0;
    for (int u = 0; u < k; ++u)
      for (int w = 0; w < k; ++w)
        if (power >> (u * 8 + w) & 1U)
          for (auto [x, v] : base)
            if (x == w) next |= Rel{1} << (u * 8 + v);
    power = next;
  }
  return acc;
}

Line closure() {
  std::mt19937_64 rng(3);
  int bad = 0;
  for (int i = 0; i < kRelations; ++i) {
    int k = 1 + i % kRelWorlds;
    Rel r = random_model(rng, k, Signature::defaults(), 0.1 + 0.08 * (i % 6)).act("a");
    if (closure_plus(r, k) != brute_plus(r, k)) ++bad;
  }
  long pairs = 0, adj_bad = 0;
  for (int k = 1; k <= kAdjunctionWorlds; ++k) {
    std::vector<Rel> all, trans;
    for (std::uint32_t code = 0; code < (1u << (k * k)); ++code) {
      Rel r = 0;
      for (int c = 0; c < k * k; ++c)
        if (code >> c & 1U) r |= pair_bit(c / k, c % k);
      all.push_back(r);
      if (is_transitive(r, k)) trans.push_back(r);
    }
    for (Rel r : all) {
      Rel plus = closure_plus(r, k);
      for (Rel t : trans) {
        ++pairs;
        if (((r & ~t) == 0) != ((plus & ~t) == 0)) ++adj_bad;
      }
    }
  }
  std::ostringstream d;
  d << kRelations << " relations, " << bad << " closure mismatches; adjunction over " << pairs << " pairs, "
    << adj_bad << " failures";
  return {bad == 0 && adj_bad == 0, d.str()};
}

Line cut_fixtures() {
  Signature sig = Signature::defaults();
  ParseContext ctx{&sig, nullptr, false};
  const std::vector<std::string> terms{"p",         "top",           "a wtri1 p", "(a+) wtri0 p",
                                       "a fbox1 p", "(a+) fbox0 p",  "a btri1 p", "(a+) btri0 p",
                                       "a bbox1 p", "(a+) bbox0 p",  "p ?1",      "p ?0",
                                       "a+",        "(a+)-",         "p & q"};
  std::string bad;
  for (const auto& f : terms) {
    Term t = parse_term(f, ctx);
    sort_of(t);
    auto p = principal_cut_fixture(t);
    auto before = cut_ranks(p);
    CutReport rep;
    auto q = reduce(p, kCutFuel, &rep);
    bool ok = rep.steps == 1 && equal(q->conclusion, p->conclusion) && check(q, kOmegaBound).ok &&
              rank_below(cut_ranks(q), before);
    if (!ok) bad += " [" + f + "]";
  }
  return {bad.empty(), std::to_string(terms.size()) + " fixtures" + (bad.empty() ? "" : ", failing:" + bad)};
}

Line display_all(const std::vector<std::pair<std::string, ProofPtr>>& proofs) {
  long attempts = 0, bad = 0;
  std::unordered_set<Sequent, SequentHash, SequentEq> seen;
  for (const auto& [name, p] : proofs)
    for_each_sequent(p, kOmegaBound, [&](const Sequent& s) {
      if (!seen.insert(s).second) return;
      for (const auto& e : substructures(s)) {
        ++attempts;
        if (!display(s, e.path, kDisplayBudget).found) ++bad;
      }
    });
  return {bad == 0, std::to_string(attempts) + " displays over " + std::to_string(seen.size()) + " sequents, " +
                        std::to_string(bad) + " failures"};
}

Line audit() {
  int schemas = 0, bad = 0, cuts = 0;
  for (const auto& r : catalog()) {
    ++schemas;
    auto rep = audit_schema(r);
    if (!rep.all_pass()) ++bad;
    if (r.is_cut) {
      ++cuts;
      bool has_c10 = false;
      for (const auto& [n, ok] : rep.checks) has_c10 = has_c10 || (n == "C10" && ok);
      if (!has_c10) ++bad;
    }
  }
  int sims = 0, sim_bad = 0;
  for (const auto& s : simulate_derived(kSimulationBudget)) {
    ++sims;
    if (!s.ok || s.steps > kSimulationBudget) ++sim_bad;
  }
  std::ostringstream d;
  d << schemas << " schemas (" << cuts << " cuts), " << bad << " failing; " << sims << " derived rules, " << sim_bad
    << " unsimulated";
  return {bad == 0 && sim_bad == 0, d.str()};
}

Line uniformity(const std::vector<std::pair<std::string, ProofPtr>>& proofs) {
  long sequents = 0, bad = 0;
  auto visit = [&](const ProofPtr& p, int bound) {
    for_each_sequent(p, bound, [&](const Sequent& s) {
      ++sequents;
      if (!is_type_uniform(s)) ++bad;
    });
  };
  for (const auto& [name, p] : proofs) visit(p, kOmegaBound);
  for (const auto& s : simulate_derived(kSimulationBudget))
    if (s.proof) visit(s.proof, 3);
  return {bad == 0, std::to_string(sequents) + " sequents, " + std::to_string(bad) + " not type-uniform"};
}

Line stretch() {
  std::string bad;
  int n = 0;
  for (const auto& id : corpus::axiom_ids()) {
    if (!corpus::is_stretch(id)) continue;
    ++n;
    auto p = corpus::derive(id);
    if (!check(p, kOmegaBound).ok || !equal(p->conclusion, corpus::expected(id))) bad += " " + id;
  }
  return {n == 2 && bad.empty(), std::to_string(n) + " diamond builders" + (bad.empty() ? "" : ", failing:" + bad)};
}

}  // namespace

int main() {
  const auto proofs = corpus_proofs();
  std::vector<std::pair<const char*, std::function<Line()>>> criteria{
      {"box axiom derivations", box_builders},
      {"lemmas and main proposition", lemmas},
      {"rule soundness fuzz", fuzzing},
      {"pdl semantics vs translation", pdl_agreement},
      {"transitive closure", closure},
      {"principal cut reduction", cut_fixtures},
      {"display property", [&] { return display_all(proofs); }},
      {"schema conditions and derived rules", audit},
      {"type uniformity", [&] { return uniformity(proofs); }},
      {"diamond derivations (stretch)", stretch},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line l;
    try {
      l = criteria[i].second();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    failed += !l.ok;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, l.ok ? "PASS" : "FAIL", criteria[i].first, l.detail.c_str());
  }
  std::printf("%zu criteria, %d failing\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
