#include "simulate.hpp"

#include <functional>
#include <unordered_set>

namespace pdlmt {

namespace {

// Sequent-level metavariables of the schema become constants of the same sort.
Subst frozen(const Schema& r) {
  Subst s;
  for (const auto& [name, d] : r.metas) s[name] = mk_meta(name, d.sort, d.atom_only);
  return s;
}

void subterms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  for (const auto& k : t->kids) subterms(k, out);
}

std::vector<Term> pool_of(const std::vector<Sequent>& seqs) {
  std::vector<Term> all{mk(Op::SI)};
  for (const auto& s : seqs) {
    subterms(s.ant, all);
    subterms(s.suc, all);
  }
  std::vector<Term> out;
  std::unordered_set<Term, TermHash, TermEq> seen;
  for (auto& t : all)
    if (t->sort != Sort::Bad && seen.insert(t).second) out.push_back(t);
  return out;
}

// Metavariables of the conclusion that the premise does not bind.
std::vector<std::string> free_in_conclusion(const Schema& r) {
  std::vector<std::string> out;
  for (const auto& [name, d] : r.metas) {
    std::function<bool(const Term&)> occurs = [&](const Term& t) {
      if (t->op == Op::Meta && t->name == name) return true;
      for (const auto& k : t->kids)
        if (occurs(k)) return true;
      return false;
    };
    bool in_prem = occurs(r.premises[0].ant) || occurs(r.premises[0].suc);
    bool in_concl = occurs(r.conclusion.ant) || occurs(r.conclusion.suc);
    if (in_concl && !in_prem) out.push_back(name);
  }
  return out;
}

struct Step {
  const Schema* rule;
  Subst subst;
};

// Breadth-first search like the display search, except that conclusion-only
// metavariables are bound to terms from pool.
std::optional<std::vector<Step>> bfs(const Sequent& from, const Sequent& goal, const std::vector<const Schema*>& rules,
                                     const std::vector<Term>& pool, int budget, std::size_t max_states) {
  struct State {
    Sequent seq;
    int parent;
    Step via;
    int depth;
  };
  std::vector<std::vector<std::string>> extra(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) extra[i] = free_in_conclusion(*rules[i]);

  std::vector<State> states{{from, -1, {nullptr, {}}, 0}};
  std::unordered_set<Sequent, SequentHash, SequentEq> seen{from};
  auto chain_to = [&](int i) {
    std::vector<Step> out;
    for (; states[i].parent >= 0; i = states[i].parent) out.push_back(states[i].via);
    return std::vector<Step>(out.rbegin(), out.rend());
  };
  if (equal(from, goal)) return std::vector<Step>{};
  for (std::size_t head = 0; head < states.size(); ++head) {
    if (states[head].depth >= budget) continue;
    for (std::size_t ri = 0; ri < rules.size(); ++ri) {
      const Schema* r = rules[ri];
      Subst base;
      if (!match(r->premises[0], states[head].seq, base)) continue;
      // Enumerate bindings of the free metavariables over the pool.
      std::vector<Subst> substs{base};
      for (const auto& name : extra[ri]) {
        Sort want = lift(r->metas.at(name).sort);
        std::vector<Subst> next;
        for (const auto& s : substs)
          for (const auto& t : pool)
            if (lift(t->sort) == want) {
              Subst s2 = s;
              s2[name] = t;
              next.push_back(std::move(s2));
            }
        substs = std::move(next);
      }
      for (auto& s : substs) {
        Sequent next;
        try {
          next = instantiate(r->conclusion, s);
        } catch (const Error&) {
          continue;
        }
        if (next.ant->sort == Sort::Bad || next.suc->sort == Sort::Bad) continue;
        if (!seen.insert(next).second) continue;
        states.push_back({next, static_cast<int>(head), {r, s}, states[head].depth + 1});
        if (equal(next, goal)) return chain_to(static_cast<int>(states.size()) - 1);
        if (states.size() >= max_states) return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

ProofPtr replay(ProofPtr cur, const std::vector<Step>& chain) {
  for (const auto& st : chain) cur = apply_rule(st.rule->id, st.subst, {cur});
  return cur;
}

std::vector<const Schema*> basis_for(const Schema& r) {
  std::vector<const Schema*> out = display_rules();
  for (const auto& c : catalog()) {
    if (c.derived || c.display || c.is_omega() || c.premises.size() != 1) continue;
    if (c.group == r.group || c.id == "E_L" || c.id == "W2_R" || c.id == "I1_R_inv") out.push_back(&c);
  }
  return out;
}

int steps_of(const ProofPtr& p) {
  if (p->kind == Proof::Kind::Hyp) return 0;
  int n = 1;
  if (p->kind == Proof::Kind::Omega) {
    if (!p->kids.empty()) n += steps_of(p->kids[0]);
    return n;
  }
  for (const auto& k : p->kids) n += steps_of(k);
  return n;
}

// The derived form's base rule: same group, primitive, same number of
// premises, and a conclusion whose display class meets the derived one.
std::vector<const Schema*> base_candidates(const Schema& r) {
  std::vector<const Schema*> out;
  for (const auto& c : catalog())
    if (!c.derived && !c.display && c.group == r.group && c.premises.size() == r.premises.size() &&
        c.is_omega() == r.is_omega())
      out.push_back(&c);
  return out;
}

struct Reached {
  Sequent seq;
  std::vector<DisplayStep> chain;
};

// Every sequent display-equivalent to s within budget, with its chain.
std::vector<Reached> display_class(const Sequent& s, int budget, std::size_t cap = 4000) {
  std::vector<Reached> out;
  std::unordered_set<Sequent, SequentHash, SequentEq> seen;
  search(
      s,
      [&](const Sequent& q) {
        if (seen.insert(q).second) out.push_back({q, {}});
        return false;
      },
      display_rules(), budget, cap);
  for (auto& r : out) {
    auto chain = search(s, [&](const Sequent& q) { return equal(q, r.seq); }, display_rules(), budget);
    if (chain) r.chain = std::move(*chain);
  }
  return out;
}

ProofPtr apply_chain(ProofPtr cur, const std::vector<DisplayStep>& chain) {
  for (const auto& st : chain) cur = apply_rule(st.rule, st.subst, {cur});
  return cur;
}

bool matches_all(const std::vector<Sequent>& pats, std::size_t i, const std::vector<std::vector<Reached>>& classes,
                 Subst& s, std::vector<const Reached*>& picked) {
  if (i == pats.size()) return true;
  for (const auto& r : classes[i]) {
    Subst s2 = s;
    if (!match(pats[i], r.seq, s2)) continue;
    picked.push_back(&r);
    if (matches_all(pats, i + 1, classes, s2, picked)) {
      s = std::move(s2);
      return true;
    }
    picked.pop_back();
  }
  return false;
}

constexpr int kClassBudget = 6;

std::optional<ProofPtr> via_base(const Schema& base, const Sequent& goal,
                                 const std::vector<Sequent>& prems) {
  std::vector<std::vector<Reached>> classes;
  for (const auto& p : prems) classes.push_back(display_class(p, kClassBudget));
  Subst s;
  std::vector<const Reached*> picked;
  if (!matches_all(base.premises, 0, classes, s, picked)) return std::nullopt;
  std::vector<ProofPtr> kids;
  for (std::size_t i = 0; i < prems.size(); ++i) kids.push_back(apply_chain(hypothesis(prems[i]), picked[i]->chain));
  try {
    return display_to(apply_rule(base.id, s, kids), goal, 24);
  } catch (const Error&) {
    return std::nullopt;
  }
}

constexpr int kOmegaMembers = 3;

std::optional<ProofPtr> via_omega(const Schema& r, const Schema& base, const Subst& frozen_s, const Sequent& goal) {
  Sequent m1 = omega_member(r, frozen_s, 1);
  Subst s;
  std::vector<DisplayStep> first;
  bool found = false;
  for (const auto& c : display_class(m1, kClassBudget)) {
    Subst s2;
    if (match(base.premises[0], c.seq, s2)) {
      s = std::move(s2);
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;
  for (int n = 1; n <= kOmegaMembers; ++n) {
    Sequent want = omega_member(base, s, n);
    if (!search(omega_member(r, frozen_s, n), [&](const Sequent& q) { return equal(q, want); }, display_rules(), 24))
      return std::nullopt;
  }
  Family fam;
  fam.name = "simulate:" + r.id;
  fam.make = [r, base, frozen_s, s](int n) {
    return display_to(hypothesis(omega_member(r, frozen_s, n)), omega_member(base, s, n), 24);
  };
  try {
    return display_to(omega(base.id, s, fam, kOmegaMembers), goal, 24);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

Simulation simulate(const Schema& r, int budget) {
  Simulation out;
  out.id = r.id;
  Subst fs = frozen(r);
  Sequent goal = instantiate(r.conclusion, fs);
  std::vector<Sequent> prems;
  if (!r.is_omega())
    for (const auto& p : r.premises) prems.push_back(instantiate(p, fs));

  std::optional<ProofPtr> proof;
  if (r.is_omega()) {
    for (const Schema* b : base_candidates(r))
      if ((proof = via_omega(r, *b, fs, goal))) {
        out.basis = b->id;
        break;
      }
  } else if (prems.size() == 1) {
    auto rules = basis_for(r);
    auto pool = pool_of({prems[0], goal});
    if (auto chain = bfs(prems[0], goal, rules, pool, budget, 200000)) {
      proof = replay(hypothesis(prems[0]), *chain);
      for (const auto& st : *chain)
        if (!st.rule->display && out.basis.empty()) out.basis = st.rule->id;
    }
  } else {
    for (const Schema* b : base_candidates(r))
      if ((proof = via_base(*b, goal, prems))) {
        out.basis = b->id;
        break;
      }
  }
  if (!proof) {
    out.reason = "no simulation found within " + std::to_string(budget) + " steps";
    return out;
  }
  out.proof = *proof;
  out.steps = steps_of(out.proof);
  auto v = check(out.proof, kOmegaMembers, true);
  if (!v.ok) {
    out.reason = v.reason;
  } else if (!equal(out.proof->conclusion, goal)) {
    out.reason = "simulation ends in the wrong sequent";
  } else if (out.steps > budget) {
    out.reason = "simulation takes " + std::to_string(out.steps) + " steps";
  } else {
    out.ok = true;
  }
  return out;
}

std::vector<Simulation> simulate_derived(int budget) {
  std::vector<Simulation> out;
  for (const auto& r : catalog())
    if (r.derived) out.push_back(simulate(r, budget));
  return out;
}

}  // namespace pdlmt
