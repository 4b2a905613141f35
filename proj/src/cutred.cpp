#include "cutred.hpp"

#include "corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace pdlmt {

namespace {

bool is_cut(const ProofPtr& p) { return p->kind == Proof::Kind::Rule && p->rule.rfind("cut_", 0) == 0; }

const Proof& node_at(const ProofPtr& p, const Path& path, ProofPtr* out = nullptr) {
  ProofPtr cur = p;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->kids.size())
      throw Error(Errc::InvalidArg, "proof path " + path_string(path) + " leaves the proof");
    cur = cur->kids[i];
  }
  if (out) *out = cur;
  return *cur;
}

ProofPtr replace_node(const ProofPtr& p, const Path& path, std::size_t from, const ProofPtr& repl) {
  if (from == path.size()) return repl;
  auto copy = std::make_shared<Proof>(*p);
  copy->kids[path[from]] = replace_node(p->kids[path[from]], path, from + 1, repl);
  return copy;
}

ProofPtr cut(const ProofPtr& l, const ProofPtr& r) {
  switch (lower(l->conclusion.suc->sort)) {
    case Sort::Fm: return infer("cut_Fm", {l, r});
    case Sort::Act: return infer("cut_Act", {l, r});
    case Sort::TAct: return infer("cut_TAct", {l, r});
    default: throw Error(Errc::Internal, "cut on a term of no operational sort");
  }
}

ProofPtr rw(const ProofPtr& p, const Sequent& target) { return display_to(p, target, 24); }

bool is_identity(const ProofPtr& p) { return p->kind == Proof::Kind::Rule && (p->rule == "Id_p" || p->rule == "Id_pi"); }

// The last rule of p introduces t on the given side (0 antecedent, 1 succedent).
bool introduces(const ProofPtr& p, const Term& t, int side) {
  if (p->kind != Proof::Kind::Rule) return false;
  const Schema* r = find_schema(p->rule);
  if (!r || (r->principal_side != side && r->principal_side != 2)) return false;
  return equal(side == 0 ? p->conclusion.ant : p->conclusion.suc, t);
}

Op pick(int i, Op zero, Op one) { return i == 0 ? zero : one; }

// Triangles: L = tri_R(x |- a, y |- b), R = tri_L(a tri b |- z).
ProofPtr reduce_triangle(const Proof& c, Op tri, Op left, Op dualbox) {
  const ProofPtr &l = c.kids[0], &r = c.kids[1];
  const Term &x = l->conclusion.ant->kids[0], &y = l->conclusion.ant->kids[1];
  const Term &a = l->conclusion.suc->kids[0], &b = l->conclusion.suc->kids[1];
  const Term& z = r->conclusion.suc;
  ProofPtr q = rw(r->kids[0], {a, mk(left, z, b)});
  ProofPtr s = cut(l->kids[0], q);
  s = rw(s, {b, mk(dualbox, x, z)});
  s = cut(l->kids[1], s);
  return rw(s, {mk(tri, x, y), z});
}

// Boxes: L = box_R(y |- a sbox b), R = box_L(x |- a, b |- z).
ProofPtr reduce_box(const Proof& c, Op tri, Op left, Op box) {
  const ProofPtr &l = c.kids[0], &r = c.kids[1];
  const Term& y = l->conclusion.ant;
  const Term &a = l->conclusion.suc->kids[0], &b = l->conclusion.suc->kids[1];
  const Term &x = r->conclusion.suc->kids[0], &z = r->conclusion.suc->kids[1];
  ProofPtr q = rw(l->kids[0], {a, mk(left, b, y)});
  ProofPtr s = cut(r->kids[0], q);
  s = rw(s, {mk(tri, x, y), b});
  s = cut(s, r->kids[1]);
  return rw(s, {y, mk(box, x, z)});
}

ProofPtr step_at(const Proof& c) {
  const ProofPtr &l = c.kids[0], &r = c.kids[1];
  const Term& t = l->conclusion.suc;
  const int i = info(t->op).index;
  switch (t->op) {
    case Op::PropAtom:
    case Op::ActAtom:
      if (is_identity(l)) return r;
      return l;
    case Op::Top: return r->kids[0];
    case Op::Bot: return l->kids[0];
    case Op::And: {
      const Term &A = t->kids[0], &B = t->kids[1];
      const Term &X = l->conclusion.ant->kids[0], &Y = l->conclusion.ant->kids[1];
      const Term& Z = r->conclusion.suc;
      ProofPtr s = cut(l->kids[0], rw(r->kids[0], {A, mk(Op::SLt, Z, B)}));
      s = cut(l->kids[1], rw(s, {B, mk(Op::SGt, X, Z)}));
      return rw(s, {mk(Op::Comma, X, Y), Z});
    }
    case Op::Or: {
      const Term &A = t->kids[0], &B = t->kids[1];
      const Term& X = l->conclusion.ant;
      const Term &Y = r->conclusion.suc->kids[0], &Z = r->conclusion.suc->kids[1];
      ProofPtr s = cut(rw(l->kids[0], {mk(Op::SGt, A, X), B}), r->kids[1]);
      s = cut(rw(s, {mk(Op::SLt, X, Z), A}), r->kids[0]);
      return rw(s, {X, mk(Op::Comma, Y, Z)});
    }
    case Op::Imp: {
      const Term &A = t->kids[0], &B = t->kids[1];
      const Term& X = l->conclusion.ant;
      const Term &Y = r->conclusion.suc->kids[0], &Z = r->conclusion.suc->kids[1];
      ProofPtr s = cut(rw(l->kids[0], {mk(Op::Comma, A, X), B}), r->kids[1]);
      s = cut(r->kids[0], rw(s, {A, mk(Op::SLt, Z, X)}));
      return rw(s, {X, mk(Op::SGt, Y, Z)});
    }
    case Op::Wtri0:
    case Op::Wtri1:
      return reduce_triangle(c, pick(i, Op::SWtri0, Op::SWtri1), pick(i, Op::VBLeft0, Op::SBLeft1),
                             pick(i, Op::SBbox0, Op::SBbox1));
    case Op::Btri0:
    case Op::Btri1:
      return reduce_triangle(c, pick(i, Op::SBtri0, Op::SBtri1), pick(i, Op::VWLeft0, Op::SWLeft1),
                             pick(i, Op::SWbox0, Op::SWbox1));
    case Op::Fbox0:
    case Op::Fbox1:
      return reduce_box(c, pick(i, Op::SBtri0, Op::SBtri1), pick(i, Op::VWLeft0, Op::SWLeft1),
                        pick(i, Op::SWbox0, Op::SWbox1));
    case Op::Bbox0:
    case Op::Bbox1:
      return reduce_box(c, pick(i, Op::SWtri0, Op::SWtri1), pick(i, Op::VBLeft0, Op::SBLeft1),
                        pick(i, Op::SBbox0, Op::SBbox1));
    case Op::Test0:
    case Op::Test1: {
      const Term& X = l->conclusion.ant->kids[0];
      const Term& Y = r->conclusion.suc;
      ProofPtr s = cut(l->kids[0], rw(r->kids[0], {t->kids[0], mk(pick(i, Op::SRTest0, Op::SRTest1), Y)}));
      return rw(s, {mk(pick(i, Op::STest0, Op::STest1), X), Y});
    }
    case Op::Plus: {
      const Term& Pi = l->conclusion.ant->kids[0];
      const Term& D = r->conclusion.suc;
      ProofPtr s = cut(l->kids[0], rw(r->kids[0], {t->kids[0], mk(Op::SMinus, D)}));
      return rw(s, {mk(Op::SPlus, Pi), D});
    }
    case Op::Minus: {
      const Term& Pi = l->conclusion.ant;
      const Term& D = r->conclusion.suc->kids[0];
      ProofPtr s = cut(rw(l->kids[0], {mk(Op::SPlus, Pi), t->kids[0]}), r->kids[0]);
      return rw(s, {Pi, mk(Op::SMinus, D)});
    }
    default: break;
  }
  throw Error(Errc::Unsupported, "no principal reduction for a cut on " + render(t));
}

bool principal_node(const Proof& c) {
  const ProofPtr &l = c.kids[0], &r = c.kids[1];
  const Term& t = l->conclusion.suc;
  if (is_atom(t)) return is_identity(l) || is_identity(r);
  return introduces(l, t, 1) && introduces(r, t, 0);
}

// Preorder search for the first principal cut; omega families are skipped.
bool find_principal(const ProofPtr& p, Path& path) {
  if (p->kind != Proof::Kind::Rule) return false;
  if (is_cut(p) && principal_node(*p)) return true;
  for (std::size_t i = 0; i < p->kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (find_principal(p->kids[i], path)) return true;
    path.pop_back();
  }
  return false;
}

void collect_ranks(const ProofPtr& p, std::vector<int>& out) {
  if (p->kind != Proof::Kind::Rule) return;
  if (is_cut(p)) out.push_back(p->kids[0]->conclusion.suc->size);
  for (const auto& k : p->kids) collect_ranks(k, out);
}

}  // namespace

bool is_principal(const ProofPtr& p, const Path& node) {
  ProofPtr n;
  node_at(p, node, &n);
  if (!is_cut(n)) throw Error(Errc::InvalidArg, "node " + path_string(node) + " is not a cut");
  return principal_node(*n);
}

ProofPtr principal_step(const ProofPtr& p, const Path& node) {
  ProofPtr n;
  node_at(p, node, &n);
  if (!is_cut(n)) throw Error(Errc::InvalidArg, "node " + path_string(node) + " is not a cut");
  if (!principal_node(*n)) throw Error(Errc::InvalidArg, "cut at " + path_string(node) + " is not principal");
  ProofPtr repl = step_at(*n);
  if (!equal(repl->conclusion, n->conclusion))
    throw Error(Errc::Internal, "reduction changed the sequent " + render(n->conclusion));
  return replace_node(p, node, 0, repl);
}

std::vector<int> cut_ranks(const ProofPtr& p) {
  std::vector<int> out;
  collect_ranks(p, out);
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool rank_below(const std::vector<int>& a, const std::vector<int>& b) {
  // Dershowitz-Manna: remove the common part; what is left of b must be
  // non-empty and dominate every remaining element of a.
  std::map<int, int> diff;
  for (int x : a) ++diff[x];
  for (int x : b) --diff[x];
  int top_b = -1, top_a = -1;
  for (const auto& [v, c] : diff) {
    if (c < 0) top_b = std::max(top_b, v);
    if (c > 0) top_a = std::max(top_a, v);
  }
  return top_b >= 0 && top_a < top_b;
}

bool cuts_strongly_uniform(const ProofPtr& p) {
  if (p->kind != Proof::Kind::Rule) return true;
  if (is_cut(p)) {
    try {
      Sort s = check_sequent(p->conclusion).sort;
      for (const auto& k : p->kids)
        if (check_sequent(k->conclusion).sort != s) return false;
    } catch (const Error&) {
      return false;
    }
  }
  for (const auto& k : p->kids)
    if (!cuts_strongly_uniform(k)) return false;
  return true;
}

ProofPtr reduce(const ProofPtr& p, int fuel, CutReport* report) {
  CutReport local;
  CutReport& rep = report ? *report : local;
  rep = CutReport{};
  ProofPtr cur = p;
  for (;;) {
    Path path;
    if (!find_principal(cur, path)) break;
    if (rep.steps >= fuel) {
      rep.fuel_exhausted = true;
      break;
    }
    ProofPtr n;
    node_at(cur, path, &n);
    rep.ranks.push_back(cut_ranks(cur));
    rep.cases.push_back(info(n->kids[0]->conclusion.suc->op).name);
    cur = principal_step(cur, path);
    ++rep.steps;
  }
  rep.ranks.push_back(cut_ranks(cur));
  rep.residual = static_cast<int>(rep.ranks.back().size());
  return cur;
}

ProofPtr principal_cut_fixture(const Term& t) {
  if (is_atom(t)) {
    ProofPtr id = axiom(t->sort == Sort::Fm ? "Id_p" : "Id_pi", {t, t});
    return cut(id, id);
  }
  // An identity derivation ends with one introduction of t; its premise ends
  // with the other one.
  ProofPtr id = corpus::identity(t);
  const Schema& last = schema(id->rule);
  ProofPtr inner = id->kids.at(0);
  return last.principal_side == 0 ? cut(inner, id) : cut(id, inner);
}

std::string format_report(const CutReport& r) {
  std::ostringstream out;
  auto ms = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  for (int i = 0; i < r.steps; ++i)
    out << "step " << i + 1 << ": " << r.cases[i] << " cut, ranks " << ms(r.ranks[i]) << " -> " << ms(r.ranks[i + 1])
        << "\n";
  out << r.steps << " steps, " << r.residual << " residual cuts";
  if (r.fuel_exhausted) out << ", fuel exhausted";
  out << "\n";
  return out.str();
}

}  // namespace pdlmt
