#include "kernel.hpp"

#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace pdlmt {

namespace {

using Fault = std::optional<std::pair<Errc, std::string>>;

std::string show(const Sequent& s) { return render(s); }

// Local validity of a single inference; children are not inspected beyond
// their conclusions.
Fault step_fault(const Proof& p, int omega_bound) {
  if (p.kind == Proof::Kind::Hyp) return std::nullopt;
  const Schema* r = find_schema(p.rule);
  if (!r) return std::make_pair(Errc::UnknownRule, "unknown rule '" + p.rule + "'");
  if (r->is_omega() != (p.kind == Proof::Kind::Omega))
    return std::make_pair(Errc::Omega, p.rule + (r->is_omega() ? " needs an omega node" : " is not an omega rule"));
  try {
    Sequent c = instantiate(r->conclusion, p.subst);
    if (!equal(c, p.conclusion))
      return std::make_pair(Errc::BadMatch, p.rule + ": conclusion " + show(p.conclusion) + " is not the instance " +
                                                show(c));
    check_sequent(p.conclusion);
    if (p.kind == Proof::Kind::Omega) return std::nullopt;
    auto prem = premises_of(*r, p.subst, omega_bound);
    if (prem.size() != p.kids.size())
      return std::make_pair(Errc::BadMatch, p.rule + ": expected " + std::to_string(prem.size()) + " premises, got " +
                                                std::to_string(p.kids.size()));
    for (std::size_t i = 0; i < prem.size(); ++i)
      if (!equal(prem[i], p.kids[i]->conclusion))
        return std::make_pair(Errc::BadMatch, p.rule + ": premise " + std::to_string(i + 1) + " should be " +
                                                  show(prem[i]) + ", child proves " + show(p.kids[i]->conclusion));
  } catch (const Error& e) {
    return std::make_pair(e.code(), p.rule + ": " + e.what());
  }
  return std::nullopt;
}

struct Checker {
  int bound;
  bool allow_hyps;
  std::unordered_set<const Proof*> done;
  Verdict v;

  bool run(const ProofPtr& p, std::vector<int>& path) {
    if (done.count(p.get())) return true;
    if (p->kind == Proof::Kind::Hyp) {
      ++v.open_hyps;
      if (!allow_hyps) return fail(path, Errc::BadMatch, "open hypothesis " + show(p->conclusion));
      done.insert(p.get());
      return true;
    }
    if (auto f = step_fault(*p, bound)) return fail(path, f->first, f->second);
    if (p->kind == Proof::Kind::Omega) {
      const Schema& r = schema(p->rule);
      for (int n = 1; n <= bound; ++n) {
        ProofPtr m;
        if (n <= static_cast<int>(p->kids.size())) {
          m = p->kids[n - 1];
        } else if (p->family.make) {
          try {
            m = p->family.make(n);
          } catch (const Error& e) {
            return fail(path, e.code(), "family " + p->family.name + " member " + std::to_string(n) + ": " + e.what());
          }
        }
        if (!m) return fail(path, Errc::Omega, p->rule + ": no proof for member " + std::to_string(n));
        Sequent want = omega_member(r, p->subst, n);
        if (!equal(want, m->conclusion))
          return fail(path, Errc::Omega, p->rule + ": member " + std::to_string(n) + " should be " + show(want) +
                                             ", family proves " + show(m->conclusion));
        path.push_back(n - 1);
        bool ok = run(m, path);
        path.pop_back();
        if (!ok) return false;
      }
    } else {
      for (std::size_t i = 0; i < p->kids.size(); ++i) {
        path.push_back(static_cast<int>(i));
        bool ok = run(p->kids[i], path);
        path.pop_back();
        if (!ok) return false;
      }
    }
    done.insert(p.get());
    return true;
  }

  bool fail(const std::vector<int>& path, Errc code, std::string reason) {
    v.ok = false;
    v.path = path;
    v.code = code;
    v.reason = std::move(reason);
    return false;
  }
};

std::shared_ptr<Proof> node(const std::string& id, Subst s, std::vector<ProofPtr> kids, Sequent c) {
  auto p = std::make_shared<Proof>();
  p->rule = id;
  p->subst = std::move(s);
  p->kids = std::move(kids);
  p->conclusion = std::move(c);
  return p;
}

void throw_fault(const Proof& p) {
  if (auto f = step_fault(p, 0)) throw Error(f->first, f->second);
}

std::mutex registry_mu;
std::map<std::string, FamilyFactory>& registry() {
  static std::map<std::string, FamilyFactory> r;
  return r;
}

}  // namespace

Verdict check(const ProofPtr& p, int omega_bound, bool allow_hyps) {
  Checker c{omega_bound, allow_hyps, {}, {}};
  if (!p) {
    c.v.ok = false;
    c.v.code = Errc::InvalidArg;
    c.v.reason = "empty proof";
    return c.v;
  }
  std::vector<int> path;
  try {
    c.run(p, path);
  } catch (const Error& e) {
    c.fail(path, e.code(), e.what());
  } catch (const std::exception& e) {
    c.fail(path, Errc::Internal, e.what());
  }
  return c.v;
}

ProofPtr apply_rule(const std::string& id, const Subst& s, std::vector<ProofPtr> kids) {
  const Schema& r = schema(id);
  if (r.is_omega()) throw Error(Errc::Omega, id + " is an omega rule");
  auto p = node(id, s, std::move(kids), instantiate(r.conclusion, s));
  throw_fault(*p);
  return p;
}

ProofPtr infer(const std::string& id, std::vector<ProofPtr> kids, const Subst& extra) {
  const Schema& r = schema(id);
  if (r.is_omega()) throw Error(Errc::Omega, id + " is an omega rule");
  if (kids.size() != r.premises.size())
    throw Error(Errc::BadMatch, id + ": expected " + std::to_string(r.premises.size()) + " premises");
  Subst s = extra;
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (!match(r.premises[i], kids[i]->conclusion, s))
      throw Error(Errc::BadMatch, id + ": premise " + std::to_string(i + 1) + " does not match " +
                                      show(kids[i]->conclusion));
  return apply_rule(id, s, std::move(kids));
}

ProofPtr conclude(const std::string& id, const Sequent& goal, std::vector<ProofPtr> kids, const Subst& extra) {
  const Schema& r = schema(id);
  Subst s = extra;
  if (!match(r.conclusion, goal, s)) throw Error(Errc::BadMatch, id + ": conclusion does not match " + show(goal));
  if (kids.size() != r.premises.size())
    throw Error(Errc::BadMatch, id + ": expected " + std::to_string(r.premises.size()) + " premises");
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (!match(r.premises[i], kids[i]->conclusion, s))
      throw Error(Errc::BadMatch, id + ": premise " + std::to_string(i + 1) + " does not match " +
                                      show(kids[i]->conclusion));
  return apply_rule(id, s, std::move(kids));
}

ProofPtr axiom(const std::string& id, const Sequent& s) { return conclude(id, s, {}); }

ProofPtr hypothesis(const Sequent& s) {
  check_sequent(s);
  auto p = std::make_shared<Proof>();
  p->kind = Proof::Kind::Hyp;
  p->conclusion = s;
  return p;
}

ProofPtr omega(const std::string& id, const Subst& s, Family fam, int materialize) {
  const Schema& r = schema(id);
  if (!r.is_omega()) throw Error(Errc::Omega, id + " is not an omega rule");
  auto p = node(id, s, {}, instantiate(r.conclusion, s));
  p->kind = Proof::Kind::Omega;
  for (int n = 1; n <= materialize; ++n) {
    ProofPtr m = fam.make(n);
    Sequent want = omega_member(r, s, n);
    if (!equal(m->conclusion, want))
      throw Error(Errc::Omega, id + ": member " + std::to_string(n) + " should be " + show(want) + ", family proves " +
                                   show(m->conclusion));
    p->kids.push_back(std::move(m));
  }
  p->family = std::move(fam);
  throw_fault(*p);
  return p;
}

void register_family(const std::string& name, FamilyFactory f) {
  std::lock_guard<std::mutex> lock(registry_mu);
  registry()[name] = std::move(f);
}

std::optional<Family> find_family(const std::string& name, const std::map<std::string, std::string>& params) {
  FamilyFactory f;
  {
    std::lock_guard<std::mutex> lock(registry_mu);
    auto it = registry().find(name);
    if (it == registry().end()) return std::nullopt;
    f = it->second;
  }
  return f(params);
}

// ---------------------------------------------------------------- display

const std::vector<const Schema*>& display_rules() {
  static const std::vector<const Schema*> rules = [] {
    std::vector<const Schema*> out;
    for (const auto& r : catalog())
      if (r.display && r.premises.size() == 1) out.push_back(&r);
    return out;
  }();
  return rules;
}

std::optional<std::vector<DisplayStep>> search(const Sequent& from, const std::function<bool(const Sequent&)>& goal,
                                               const std::vector<const Schema*>& rules, int budget,
                                               std::size_t max_states) {
  struct State {
    Sequent seq;
    int parent;
    const Schema* via;
    Subst subst;
    int depth;
  };
  std::vector<State> states{{from, -1, nullptr, {}, 0}};
  std::unordered_set<Sequent, SequentHash, SequentEq> seen{from};
  auto chain_to = [&](int i) {
    std::vector<DisplayStep> out;
    for (; states[i].parent >= 0; i = states[i].parent)
      out.push_back({states[i].via->id, states[i].subst, states[i].seq});
    return std::vector<DisplayStep>(out.rbegin(), out.rend());
  };
  if (goal(from)) return std::vector<DisplayStep>{};
  for (std::size_t head = 0; head < states.size(); ++head) {
    if (states[head].depth >= budget) continue;
    for (const Schema* r : rules) {
      Subst s;
      if (!match(r->premises[0], states[head].seq, s)) continue;
      Sequent next;
      try {
        next = instantiate(r->conclusion, s);
      } catch (const Error&) {
        continue;  // conclusion-only metavariables
      }
      if (next.ant->sort == Sort::Bad || next.suc->sort == Sort::Bad) continue;
      if (!seen.insert(next).second) continue;
      states.push_back({next, static_cast<int>(head), r, std::move(s), states[head].depth + 1});
      if (goal(next)) return chain_to(static_cast<int>(states.size()) - 1);
      if (states.size() >= max_states) return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

const char* const kMarker = "#target";

Term replace_meta(const Term& t, const std::string& name, const Term& repl) {
  if (t->op == Op::Meta) return t->name == name ? repl : t;
  if (t->kids.empty()) return t;
  bool changed = false;
  std::vector<Term> kids;
  kids.reserve(t->kids.size());
  for (const auto& k : t->kids) {
    kids.push_back(replace_meta(k, name, repl));
    changed = changed || kids.back() != k;
  }
  return changed ? mk(t->op, std::move(kids)) : t;
}

}  // namespace

DisplayResult display(const Sequent& s, const Path& path, int budget) {
  if (path.empty()) throw Error(Errc::InvalidArg, "display path must start with a side (0 or 1)");
  Term target = subterm_at(s, path);
  Pos pos = position_at(s, path);
  Term marker = mk_meta(kMarker, target->sort, is_atom(target));
  Sequent marked = replace_at(s, path, marker);
  std::size_t explored = 0;
  auto goal = [&](const Sequent& q) {
    ++explored;
    return equal(pos == Pos::Ant ? q.ant : q.suc, marker);
  };
  DisplayResult out;
  auto chain = search(marked, goal, display_rules(), budget);
  out.explored = explored;
  if (!chain) return out;
  out.found = true;
  for (auto& st : *chain) {
    st.result = {replace_meta(st.result.ant, kMarker, target), replace_meta(st.result.suc, kMarker, target)};
    for (auto& [k, v] : st.subst) v = replace_meta(v, kMarker, target);
  }
  out.chain = std::move(*chain);
  return out;
}

ProofPtr display_to(const ProofPtr& p, const Sequent& target, int budget) {
  auto chain = search(p->conclusion, [&](const Sequent& q) { return equal(q, target); }, display_rules(), budget);
  if (!chain)
    throw Error(Errc::Display, "no display chain from " + show(p->conclusion) + " to " + show(target) +
                                   " within budget " + std::to_string(budget));
  ProofPtr cur = p;
  for (const auto& st : *chain) cur = apply_rule(st.rule, st.subst, {cur});
  return cur;
}

// ---------------------------------------------------------------- scripts

namespace {

using nlohmann::json;

void collect_metas(const Term& t, MetaDecls& out) {
  if (t->op == Op::Meta) {
    out[t->name] = MetaDecl{t->msort, t->atom_only};
    return;
  }
  for (const auto& k : t->kids) collect_metas(k, out);
}

std::string meta_decl_text(const MetaDecls& d) {
  std::string out;
  for (const auto& [name, m] : d) {
    std::string sort = sort_name(m.sort);
    if (m.atom_only) sort = m.sort == Sort::Fm ? "Prop" : "ActAtom";
    out += (out.empty() ? "" : " ") + name + ":" + sort;
  }
  return out;
}

}  // namespace

std::string save_script(const ProofPtr& root, const Signature& sig) {
  std::unordered_map<const Proof*, int> ids;
  std::vector<json> lines;
  MetaDecls metas;
  std::function<int(const ProofPtr&)> emit = [&](const ProofPtr& p) -> int {
    auto it = ids.find(p.get());
    if (it != ids.end()) return it->second;
    json j;
    std::vector<int> kid_ids;
    if (p->kind != Proof::Kind::Omega)
      for (const auto& k : p->kids) kid_ids.push_back(emit(k));
    int id = static_cast<int>(lines.size());
    j["id"] = id;
    collect_metas(p->conclusion.ant, metas);
    collect_metas(p->conclusion.suc, metas);
    if (p->kind == Proof::Kind::Hyp) {
      j["hyp"] = render(p->conclusion);
    } else {
      j["rule"] = p->rule;
      json s = json::object();
      for (const auto& [k, v] : p->subst) {
        s[k] = render(v);
        collect_metas(v, metas);
      }
      j["subst"] = s;
      if (p->kind == Proof::Kind::Omega) {
        j["family"] = {{"name", p->family.name}, {"params", p->family.params}};
        j["verified_up_to"] = p->kids.size();
      } else {
        j["kids"] = kid_ids;
      }
      j["conclusion"] = render(p->conclusion);
    }
    lines.push_back(std::move(j));
    ids.emplace(p.get(), id);
    return id;
  };
  emit(root);
  std::ostringstream out;
  json header = {{"format", "pdlmt-proof"}, {"version", 1}, {"atoms", sig.header()}};
  if (!metas.empty()) header["metas"] = meta_decl_text(metas);
  out << header.dump() << '\n';
  for (const auto& l : lines) out << l.dump() << '\n';
  return out.str();
}

ProofPtr load_script(const std::string& text, Signature* sig_out) {
  std::istringstream in(text);
  std::string line;
  Signature sig = Signature::defaults();
  MetaDecls metas;
  std::vector<ProofPtr> nodes;
  bool header = false;
  int lineno = 0;
  auto bad = [&](const std::string& msg) { return Error(Errc::Parse, "script line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw bad(e.what());
    }
    if (!header) {
      if (j.value("format", "") != "pdlmt-proof") throw bad("missing pdlmt-proof header");
      if (j.contains("atoms")) sig = Signature::from_header(j["atoms"].get<std::string>());
      if (j.contains("metas")) metas = parse_meta_decls(j["metas"].get<std::string>());
      header = true;
      continue;
    }
    ParseContext ctx{&sig, &metas, false};
    if (j.value("id", -1) != static_cast<int>(nodes.size())) throw bad("node ids must be consecutive from 0");
    auto p = std::make_shared<Proof>();
    try {
      if (j.contains("hyp")) {
        p->kind = Proof::Kind::Hyp;
        p->conclusion = parse_sequent(j["hyp"].get<std::string>(), ctx);
      } else {
        p->rule = j.at("rule").get<std::string>();
        for (const auto& [k, v] : j.at("subst").items()) p->subst[k] = parse_term(v.get<std::string>(), ctx);
        p->conclusion = parse_sequent(j.at("conclusion").get<std::string>(), ctx);
        if (j.contains("family")) {
          p->kind = Proof::Kind::Omega;
          std::string name = j["family"].at("name").get<std::string>();
          auto params = j["family"].value("params", std::map<std::string, std::string>{});
          auto fam = find_family(name, params);
          if (!fam) throw Error(Errc::Omega, "unknown omega family '" + name + "'");
          p->family = std::move(*fam);
          int upto = j.value("verified_up_to", 0);
          for (int n = 1; n <= upto; ++n) p->kids.push_back(p->family.make(n));
        } else {
          for (int k : j.at("kids").get<std::vector<int>>()) {
            if (k < 0 || k >= static_cast<int>(nodes.size())) throw bad("child id " + std::to_string(k) + " not yet defined");
            p->kids.push_back(nodes[k]);
          }
        }
      }
    } catch (const json::exception& e) {
      throw bad(e.what());
    }
    nodes.push_back(std::move(p));
  }
  if (!header) throw Error(Errc::Parse, "empty proof script");
  if (nodes.empty()) throw Error(Errc::Parse, "proof script has no nodes");
  if (sig_out) *sig_out = sig;
  return nodes.back();
}

void for_each_sequent(const ProofPtr& root, int omega_bound, const std::function<void(const Sequent&)>& f) {
  std::unordered_set<const Proof*> seen;
  std::function<void(const ProofPtr&)> go = [&](const ProofPtr& p) {
    if (!seen.insert(p.get()).second) return;
    f(p->conclusion);
    if (p->kind == Proof::Kind::Omega) {
      for (int n = 1; n <= omega_bound; ++n) {
        if (n <= static_cast<int>(p->kids.size())) go(p->kids[n - 1]);
        else if (p->family.make) go(p->family.make(n));
      }
      return;
    }
    for (const auto& k : p->kids) go(k);
  };
  go(root);
}

namespace {

template <class F>
long long tree_sum(const ProofPtr& root, F weight) {
  std::unordered_map<const Proof*, long long> memo;
  std::function<long long(const ProofPtr&)> go = [&](const ProofPtr& p) -> long long {
    auto it = memo.find(p.get());
    if (it != memo.end()) return it->second;
    long long n = weight(*p);
    for (const auto& k : p->kids) n += go(k);
    memo.emplace(p.get(), n);
    return n;
  };
  return go(root);
}

}  // namespace

int count_rule(const ProofPtr& p, const std::string& prefix) {
  return static_cast<int>(tree_sum(p, [&](const Proof& q) { return q.rule.rfind(prefix, 0) == 0 ? 1 : 0; }));
}

int proof_size(const ProofPtr& p) {
  return static_cast<int>(tree_sum(p, [](const Proof&) { return 1; }));
}

namespace {

void ascii_tree(const ProofPtr& p, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += render(p->conclusion);
  if (p->kind == Proof::Kind::Hyp) {
    out += "   [hyp]\n";
    return;
  }
  out += "   [" + p->rule + "]";
  if (p->kind == Proof::Kind::Omega)
    out += " family " + p->family.name + ", members 1.." + std::to_string(p->kids.size()) + " shown";
  out += '\n';
  for (const auto& k : p->kids) ascii_tree(k, depth + 1, out);
}

std::string latex_label(const std::string& rule) {
  std::string out;
  for (char c : rule) {
    if (c == '_') out += "\\_";
    else out += c;
  }
  return "\\scriptsize " + out;
}

void latex_tree(const ProofPtr& p, std::string& out) {
  static const char* infer[] = {"\\UnaryInfC", "\\BinaryInfC", "\\TrinaryInfC", "\\QuaternaryInfC",
                                "\\QuinaryInfC"};
  std::string concl = "$" + render(p->conclusion, Format::Latex) + "$";
  if (p->kind == Proof::Kind::Hyp) {
    out += "\\AxiomC{" + concl + "}\n";
    return;
  }
  std::size_t shown = p->kids.size();
  if (p->kind == Proof::Kind::Omega) shown = std::min<std::size_t>(shown, 2);
  if (shown > 5) shown = 5;
  for (std::size_t i = 0; i < shown; ++i) latex_tree(p->kids[i], out);
  if (p->kind == Proof::Kind::Omega && shown < 5) {
    out += "\\AxiomC{$\\cdots$}\n";
    ++shown;
  }
  if (shown == 0) {
    out += "\\AxiomC{}\n";
    shown = 1;
  }
  out += "\\RightLabel{" + latex_label(p->rule) + "}\n";
  out += std::string(infer[shown - 1]) + "{" + concl + "}\n";
}

}  // namespace

std::string render_tree(const ProofPtr& p, Format f) {
  std::string out;
  if (f == Format::Ascii) {
    ascii_tree(p, 0, out);
    return out;
  }
  out = "\\begin{prooftree}\n";
  latex_tree(p, out);
  out += "\\end{prooftree}\n";
  return out;
}

}  // namespace pdlmt
