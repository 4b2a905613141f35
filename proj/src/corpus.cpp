#include "corpus.hpp"

#include <mutex>

namespace pdlmt::corpus {

namespace {

const char* const kBoxIds[] = {
    "K",
    "BoxChoice_LR",
    "BoxChoice_RL",
    "BoxComposition_LR",
    "BoxComposition_RL",
    "BoxTest_LR",
    "BoxTest_RL",
    "BoxDistributivity_LR",
    "BoxDistributivity_RL",
    "BoxFixpoint_LR",
    "BoxFixpoint_RL",
    "BoxInduction",
};
const char* const kStretchIds[] = {"DiamondChoice_LR", "DiamondFixpoint_LR"};

// ------------------------------------------------------------ term helpers

Term het(const char* family, const Term& x, const Term& y) {
  Op op = indexed(family, het_index(x->sort));
  if (op == Op::None) throw Error(Errc::Internal, std::string("no ") + family + " for " + sort_name(x->sort));
  return mk(op, x, y);
}

Term fbox(const Term& x, const Term& y) { return het("fbox", x, y); }
Term wtri(const Term& x, const Term& y) { return het("wtri", x, y); }
Term swbox(const Term& x, const Term& y) { return het("swbox", x, y); }
Term sbtri(const Term& x, const Term& y) { return het("sbtri", x, y); }
Term comma(const Term& x, const Term& y) { return mk(Op::Comma, x, y); }

// x ∘ (x ∘ ... (x ∘ z)) with n copies of x.
template <class F>
Term nest(F f, const Term& x, int n, Term z) {
  for (int i = 0; i < n; ++i) z = f(x, z);
  return z;
}

// ------------------------------------------------------------ proof helpers

ProofPtr R(const std::string& id, std::vector<ProofPtr> kids, const Subst& extra = {}) {
  return infer(id, std::move(kids), extra);
}

// Extends p with display postulates until the conclusion is target.
ProofPtr rw(const ProofPtr& p, const Sequent& target) { return display_to(p, target, 24); }

// Displays the first occurrence of t (preorder) as a whole side of p's conclusion.
ProofPtr focus(const ProofPtr& p, const Term& t) {
  for (const auto& e : substructures(p->conclusion)) {
    if (!equal(e.term, t)) continue;
    auto r = display(p->conclusion, e.path);
    if (!r.found) break;
    ProofPtr cur = p;
    for (const auto& st : r.chain) cur = apply_rule(st.rule, st.subst, {cur});
    return cur;
  }
  throw Error(Errc::Display, "cannot display " + render(t) + " in " + render(p->conclusion));
}

// X |- Z  ~>  X , y |- Z
ProofPtr weaken_ant_right(const ProofPtr& p, const Term& y) {
  const Sequent& s = p->conclusion;
  return rw(R("W2_L", {p}, {{"Y", y}}), {comma(s.ant, y), s.suc});
}

// X |- Z  ~>  y , X |- Z
ProofPtr weaken_ant_left(const ProofPtr& p, const Term& y) {
  const Sequent& s = p->conclusion;
  return rw(R("W1_L", {p}, {{"Y", y}}), {comma(y, s.ant), s.suc});
}

// X |- Z  ~>  X |- Z , y
ProofPtr weaken_suc_right(const ProofPtr& p, const Term& y) {
  const Sequent& s = p->conclusion;
  return rw(R("W2_R", {p}, {{"Y", y}}), {s.ant, comma(s.suc, y)});
}

// X |- Z  ~>  X |- y , Z
ProofPtr weaken_suc_left(const ProofPtr& p, const Term& y) {
  const Sequent& s = p->conclusion;
  return rw(R("W1_R", {p}, {{"Y", y}}), {s.ant, comma(y, s.suc)});
}

// (W , Y) , Y |- X  ~>  W , Y |- X
ProofPtr contract_last(const ProofPtr& p) {
  const Sequent& s = p->conclusion;
  if (s.ant->op != Op::Comma || s.ant->kids[0]->op != Op::Comma || !equal(s.ant->kids[0]->kids[1], s.ant->kids[1]))
    throw Error(Errc::Internal, "contract_last: unexpected shape " + render(s));
  Term w = s.ant->kids[0]->kids[0], y = s.ant->kids[1], x = s.suc;
  ProofPtr q = R("E_L", {p});                                      // Y , (W , Y) |- X
  q = rw(q, {comma(w, y), mk(Op::SGt, y, x)});
  q = R("E_L", {q});                                               // Y , W |- Y > X
  q = rw(q, {comma(y, comma(y, w)), x});
  q = R("A_L", {q});                                               // (Y , Y) , W |- X
  q = rw(q, {comma(y, y), mk(Op::SLt, x, w)});
  q = R("C_L", {q});
  q = rw(q, {comma(y, w), x});
  return R("E_L", {q});
}

// ------------------------------------------------------------ the atoms

struct Kit {
  Term a, b, A, B;
  Term ap;  // a+
  Term ind; // A -> [a]A, the induction hypothesis body

  explicit Kit(const Params& prm)
      : a(mk_atom(Sort::Act, prm.alpha)),
        b(mk_atom(Sort::Act, prm.beta)),
        A(mk_atom(Sort::Fm, prm.A)),
        B(mk_atom(Sort::Fm, prm.B)),
        ap(mk(Op::Plus, a)),
        ind(mk(Op::Imp, A, fbox(a, A))) {}

  Term fbox_n(int n, const Term& c) const { return nest(fbox, a, n, c); }
  Term swbox_n(int n, const Term& c) const { return nest(swbox, a, n, c); }
  Term sbtri_n(int n, const Term& c) const { return nest(sbtri, a, n, c); }
};

ProofPtr Id(const Term& t) { return identity(t); }

// ------------------------------------------------------------ lemmas

// sbtri^n (FA , FB) |- a swbox1 A, where FA = [a]^n A and FB = [a]^n (A -> [a]A).
ProofPtr succ_core(const Kit& k, int n) {
  Term FA = k.fbox_n(n, k.A), FB = k.fbox_n(n, k.ind);
  ProofPtr pa = R("fbox1_L", {Id(k.a), Id(k.A)});
  for (int i = 2; i <= n; ++i) pa = R("fbox1_L", {Id(k.a), pa});
  Term G = k.sbtri_n(n, FA);
  pa = rw(pa, {G, k.A});

  Term w0 = swbox(k.a, k.A);
  ProofPtr pb = R("imp_L", {pa, R("fbox1_L", {Id(k.a), Id(k.A)})});  // A -> [a]A |- G > a swbox1 A
  for (int i = 1; i <= n; ++i) pb = R("fbox1_L", {Id(k.a), pb});
  pb = rw(pb, {comma(G, k.sbtri_n(n, FB)), w0});
  for (int j = n; j >= 1; --j) {
    pb = R("mon1_btri", {pb});
    if (j > 1) pb = rw(pb, {comma(k.sbtri_n(j - 1, FA), k.sbtri_n(j - 1, FB)), k.swbox_n(n - j + 1, w0)});
  }
  return rw(pb, {k.sbtri_n(n, comma(FA, FB)), w0});
}

// FA , FB |- swbox^(n+1) A
ProofPtr n_to_succ(const Kit& k, int n) {
  Term FA = k.fbox_n(n, k.A), FB = k.fbox_n(n, k.ind);
  return rw(succ_core(k, n), {comma(FA, FB), k.swbox_n(n + 1, k.A)});
}

// From sbtri^n C |- a swbox1 F, alternate fbox1_R with displays down to C |- [a]^(n+1) F.
ProofPtr box_up(const Kit& k, ProofPtr p, int n, const Term& c) {
  for (int j = n; j >= 1; --j) {
    p = R("fbox1_R", {p});
    p = rw(p, {k.sbtri_n(j - 1, c), swbox(k.a, p->conclusion.suc)});
  }
  return R("fbox1_R", {p});
}

// FA , FB |- [a]^(n+1) A
ProofPtr n_to_succ_box(const Kit& k, int n) {
  Term FA = k.fbox_n(n, k.A), FB = k.fbox_n(n, k.ind);
  return box_up(k, succ_core(k, n), n, comma(FA, FB));
}

// ((FA_1 , FB_1) , FB_2) ... , FB_n |- swbox^(n+1) A with n-1 cuts.
ProofPtr chain(const Kit& k, int n) {
  if (n == 1) return n_to_succ(k, 1);
  ProofPtr p = n_to_succ_box(k, 1);
  for (int i = 2; i <= n; ++i) {
    ProofPtr q = i < n ? n_to_succ_box(k, i) : n_to_succ(k, i);
    Term FA = k.fbox_n(i, k.A), FB = k.fbox_n(i, k.ind);
    q = rw(q, {FA, mk(Op::SLt, q->conclusion.suc, FB)});
    p = R("cut_Fm", {p, q});
    p = rw(p, {comma(p->conclusion.ant, FB), q->conclusion.suc->kids[0]});
  }
  return p;
}

// [a+]C |- [a]^n C
ProofPtr plus_unfold(const Kit& k, int n, const Term& c) {
  ProofPtr p = R("plus_R", {Id(k.a)});  // a^op |- a+
  if (n >= 2) {
    ProofPtr base = R("dp_oplus_ominus", {p});  // a |- (a+)^om
    ProofPtr acc = base;
    for (int i = 2; i <= n; ++i) acc = R("abs1", {base, acc});
    p = R("dp_oplus_ominus_inv", {acc});
  }
  p = R("fbox0_L", {p, Id(c)});
  p = R("dem_wbox", {p});  // [a+]C |- a^(n) swbox1 C
  Term top = p->conclusion.ant;
  for (int j = 0; j + 1 < n; ++j) {
    p = R("act1_wbox_inv", {p});
    const Term& inner = p->conclusion.suc->kids[1];
    p = rw(p, {k.sbtri_n(j + 1, top), inner});
  }
  return box_up(k, p, n - 1, top);
}

// [a]A , [a+](A -> [a]A) |- swbox^n A
ProofPtr plus_chain(const Kit& k, int n) {
  Term C1 = fbox(k.a, k.A), D = fbox(k.ap, k.ind);
  if (n == 1) return weaken_ant_right(R("fbox1_L", {Id(k.a), Id(k.A)}), D);
  ProofPtr p = chain(k, n - 1);
  Sequent goal{C1, p->conclusion.suc};
  for (int i = 1; i < n; ++i) {
    p = focus(p, k.fbox_n(i, k.ind));
    p = R("cut_Fm", {plus_unfold(k, i, k.ind), p});
    goal.ant = comma(goal.ant, D);
  }
  p = rw(p, goal);
  for (int i = 0; i + 2 < n; ++i) p = contract_last(p);
  return p;
}

// a^(n) sbtri1 ([a]A , [a+](A -> [a]A)) |- A
ProofPtr induction_premise(const Kit& k, int n) {
  Term X = comma(fbox(k.a, k.A), fbox(k.ap, k.ind));
  ProofPtr p = rw(plus_chain(k, n), {k.sbtri_n(n, X), k.A});
  for (int i = 1; i < n; ++i) p = R("act1_btri", {p});
  return p;
}

// ------------------------------------------------------------ axioms

ProofPtr box_k(const Kit& k) {
  Term FA = fbox(k.a, k.A), FI = fbox(k.a, mk(Op::Imp, k.A, k.B));
  ProofPtr l = rw(R("fbox1_L", {Id(k.a), Id(k.A)}), {sbtri(k.a, FA), k.A});
  ProofPtr p = R("fbox1_L", {Id(k.a), R("imp_L", {l, Id(k.B)})});
  p = rw(p, {comma(sbtri(k.a, FA), sbtri(k.a, FI)), k.B});
  p = R("mon1_btri", {p});
  p = rw(p, {comma(FA, FI), swbox(k.a, k.B)});
  p = R("fbox1_R", {p});
  p = rw(p, {FI, mk(Op::SGt, FA, fbox(k.a, k.B))});
  return R("imp_R", {p});
}

ProofPtr box_choice_lr(const Kit& k) {
  auto side = [&](const Term& x, const Term& other, const char* weaken) {
    ProofPtr p = R(weaken, {Id(x)}, {{"z", other}});  // x |- a btw1 b
    p = R("fbox1_L", {R("cup1_R", {p}), Id(k.A)});
    return R("fbox1_R", {p});
  };
  ProofPtr p = R("and_R", {side(k.a, k.b, "W1_2R"), side(k.b, k.a, "W1_1R")});
  return R("C_L", {p});
}

ProofPtr box_choice_rl(const Kit& k) {
  Term FA = fbox(k.a, k.A), FB = fbox(k.b, k.A);
  auto side = [&](const Term& x) {
    ProofPtr p = R("fbox1_L", {Id(x), Id(k.A)});
    return rw(p, {x, mk(Op::SWLeft1, k.A, fbox(x, k.A))});
  };
  ProofPtr p = R("cup1_L", {side(k.a), side(k.b)});
  p = R("choice_wleft1_R", {p});
  Term ab = mk(Op::Cup1, k.a, k.b);
  p = rw(p, {comma(FA, FB), swbox(ab, k.A)});
  p = R("fbox1_R", {p});
  return R("and_L", {p});
}

ProofPtr box_composition_lr(const Kit& k) {
  Term ab = mk(Op::Seq1, k.a, k.b), F = fbox(ab, k.A);
  ProofPtr p = R("fbox1_L", {R("seq1_R", {Id(k.a), Id(k.b)}), Id(k.A)});
  p = R("act1_wbox_inv", {p});  // F |- a swbox1 (b swbox1 A)
  p = rw(p, {sbtri(k.a, F), swbox(k.b, k.A)});
  p = R("fbox1_R", {p});
  p = rw(p, {F, swbox(k.a, fbox(k.b, k.A))});
  return R("fbox1_R", {p});
}

ProofPtr box_composition_rl(const Kit& k) {
  Term F = fbox(k.a, fbox(k.b, k.A));
  ProofPtr p = R("fbox1_L", {Id(k.a), R("fbox1_L", {Id(k.b), Id(k.A)})});
  p = R("act1_wbox", {p});  // F |- (a ;b1 b) swbox1 A
  Term ab = mk(Op::SSeq1, k.a, k.b);
  p = rw(p, {ab, mk(Op::SWLeft1, k.A, F)});
  p = R("seq1_L", {p});
  p = rw(p, {F, swbox(mk(Op::Seq1, k.a, k.b), k.A)});
  return R("fbox1_R", {p});
}

ProofPtr box_test_lr(const Kit& k) {
  ProofPtr p = R("fbox1_L", {R("test1_R", {Id(k.A)}), Id(k.B)});
  p = R("test1_wbox_inv", {p});
  return R("imp_R", {p});
}

ProofPtr box_test_rl(const Kit& k) {
  Term I = mk(Op::Imp, k.A, k.B), t = mk(Op::STest1, k.A);
  ProofPtr p = R("test1_wbox", {R("imp_L", {Id(k.A), Id(k.B)})});
  p = rw(p, {t, mk(Op::SWLeft1, k.B, I)});
  p = R("test1_L", {p});
  p = rw(p, {I, swbox(mk(Op::Test1, k.A), k.B)});
  return R("fbox1_R", {p});
}

ProofPtr box_distributivity_lr(const Kit& k) {
  auto side = [&](ProofPtr leaf) {
    ProofPtr p = R("fbox1_L", {Id(k.a), R("and_L", {leaf})});
    return R("fbox1_R", {p});
  };
  ProofPtr l = side(weaken_ant_right(Id(k.A), k.B));
  ProofPtr r = side(weaken_ant_left(Id(k.B), k.A));
  return R("C_L", {R("and_R", {l, r})});
}

ProofPtr box_distributivity_rl(const Kit& k) {
  auto side = [&](const Term& c) {
    return rw(R("fbox1_L", {Id(k.a), Id(c)}), {sbtri(k.a, fbox(k.a, c)), c});
  };
  ProofPtr p = R("mon1_btri", {R("and_R", {side(k.A), side(k.B)})});
  Term FA = fbox(k.a, k.A), FB = fbox(k.a, k.B);
  p = rw(p, {comma(FA, FB), swbox(k.a, mk(Op::And, k.A, k.B))});
  return R("and_L", {R("fbox1_R", {p})});
}

ProofPtr box_fixpoint_lr(const Kit& k) {
  Term F = fbox(k.ap, k.A);
  ProofPtr l = R("fbox0_L", {R("plus_R", {Id(k.a)}), Id(k.A)});
  l = R("fbox1_R", {R("dem_wbox", {l})});

  ProofPtr r = R("abs4", {R("plus_R", {Id(k.a)}), Id(k.ap)});  // a^op ;b4 a+ |- (a+)^om
  r = R("dp_oplus_ominus_inv", {r});
  r = R("fbox0_L", {r, Id(k.A)});
  r = R("act4_wbox_inv", {R("dem_wbox", {r})});  // F |- a^op swbox0 (a+ swbox0 A)
  Term aop = mk(Op::SPlus, k.a);
  r = rw(r, {sbtri(aop, F), swbox(k.ap, k.A)});
  r = R("fbox0_R", {r});
  r = rw(r, {F, swbox(aop, F)});
  r = R("fbox1_R", {R("dem_wbox", {r})});
  return R("C_L", {R("and_R", {l, r})});
}

ProofPtr box_fixpoint_rl(const Kit& k) {
  Term C1 = fbox(k.a, k.A), C2 = fbox(k.a, fbox(k.ap, k.A)), X = comma(C1, C2);
  Term aop = mk(Op::SPlus, k.a);
  ProofPtr l = weaken_ant_right(R("fbox1_L", {Id(k.a), Id(k.A)}), C2);
  l = rw(l, {sbtri(k.a, X), k.A});

  ProofPtr r = R("fbox0_L", {R("plus_R", {Id(k.a)}), Id(k.A)});
  r = R("fbox1_L", {Id(k.a), r});  // C2 |- a swbox1 (a^op swbox0 A)
  r = rw(r, {sbtri(aop, sbtri(k.a, C2)), k.A});
  r = R("act3_btri", {r});
  Term pre = mk(Op::SSeq3, k.a, aop);
  r = rw(r, {C2, swbox(pre, k.A)});
  r = weaken_ant_left(r, C1);
  r = rw(r, {sbtri(pre, X), k.A});

  ProofPtr p = R("FP_btri", {l, r});
  p = rw(p, {aop, mk(Op::VWLeft0, k.A, X)});
  p = R("plus_L", {p});
  p = rw(p, {X, swbox(k.ap, k.A)});
  return R("and_L", {R("fbox0_R", {p})});
}

ProofPtr box_induction(const Kit& k, const Params& prm) {
  Term X = comma(fbox(k.a, k.A), fbox(k.ap, k.ind));
  Term aop = mk(Op::SPlus, k.a);
  Family fam;
  fam.name = "induction_premise";
  fam.params = {{"alpha", prm.alpha}, {"A", prm.A}};
  Kit kk = k;
  fam.make = [kk](int n) { return induction_premise(kk, n); };
  ProofPtr p = omega("omega_btri", {{"Pi", k.a}, {"X", X}, {"Y", k.A}}, std::move(fam), 0);
  p = rw(p, {aop, mk(Op::VWLeft0, k.A, X)});
  p = R("plus_L", {p});
  p = rw(p, {X, swbox(k.ap, k.A)});
  return R("and_L", {R("fbox0_R", {p})});
}

ProofPtr diamond_choice_lr(const Kit& k) {
  auto side = [&](const Term& x) {
    ProofPtr p = R("wtri1_R", {Id(x), Id(k.A)});
    return rw(p, {x, mk(Op::SBLeft1, wtri(x, k.A), k.A)});
  };
  ProofPtr p = R("choice_bleft1_L", {R("cup1_L", {side(k.a), side(k.b)})});
  Term ab = mk(Op::Cup1, k.a, k.b);
  p = rw(p, {mk(Op::SWtri1, ab, k.A), comma(wtri(k.a, k.A), wtri(k.b, k.A))});
  return R("or_R", {R("wtri1_L", {p})});
}

ProofPtr diamond_fixpoint_lr(const Kit& k) {
  Term D1 = wtri(k.a, k.A), D2 = wtri(k.a, wtri(k.ap, k.A)), Y = comma(D1, D2);
  ProofPtr l = weaken_suc_right(R("wtri1_R", {Id(k.a), Id(k.A)}), D2);
  ProofPtr r = R("wtri0_R", {R("plus_R", {Id(k.a)}), Id(k.A)});
  r = R("act3_wtri", {R("wtri1_R", {Id(k.a), r})});
  r = weaken_suc_left(r, D1);
  ProofPtr p = R("FP_wtri", {l, r});
  Term aop = mk(Op::SPlus, k.a);
  p = rw(p, {aop, mk(Op::VBLeft0, Y, k.A)});
  p = R("plus_L", {p});
  p = rw(p, {mk(Op::SWtri0, k.ap, k.A), Y});
  return R("or_R", {R("wtri0_L", {p})});
}

std::once_flag families_once;

}  // namespace

Signature Params::signature() const {
  Signature s;
  s.props = {A, B};
  s.acts = {alpha, beta};
  for (const auto& n : s.props)
    if (s.acts.count(n)) throw Error(Errc::InvalidArg, "'" + n + "' names both a proposition and an action");
  for (const auto& n : {alpha, beta, A, B})
    if (n.empty()) throw Error(Errc::InvalidArg, "empty atom name");
  return s;
}

const std::vector<std::string>& axiom_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v(std::begin(kBoxIds), std::end(kBoxIds));
    v.insert(v.end(), std::begin(kStretchIds), std::end(kStretchIds));
    return v;
  }();
  return ids;
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"n_to_succ", "n_to_succ_box", "chain",
                                            "plus_unfold", "plus_chain", "induction_premise"};
  return ids;
}

bool is_stretch(const std::string& id) {
  for (const char* s : kStretchIds)
    if (id == s) return true;
  return false;
}

std::pair<pdl::P, pdl::P> axiom_sides(const std::string& id, const Params& prm) {
  using namespace pdl;
  prm.signature();
  P a = act(prm.alpha), b = act(prm.beta), A = prop(prm.A), B = prop(prm.B);
  auto both = [&](P x, P y, bool lr) { return lr ? std::make_pair(x, y) : std::make_pair(y, x); };
  auto dir = [&](const std::string& stem) { return id == stem + "_LR"; };
  if (id == "K") return {box(a, imp(A, B)), imp(box(a, A), box(a, B))};
  if (id == "BoxChoice_LR" || id == "BoxChoice_RL")
    return both(box(choice(a, b), A), conj(box(a, A), box(b, A)), dir("BoxChoice"));
  if (id == "BoxComposition_LR" || id == "BoxComposition_RL")
    return both(box(seq(a, b), A), box(a, box(b, A)), dir("BoxComposition"));
  if (id == "BoxTest_LR" || id == "BoxTest_RL") return both(box(test(A), B), imp(A, B), dir("BoxTest"));
  if (id == "BoxDistributivity_LR" || id == "BoxDistributivity_RL")
    return both(box(a, conj(A, B)), conj(box(a, A), box(a, B)), dir("BoxDistributivity"));
  if (id == "BoxFixpoint_LR" || id == "BoxFixpoint_RL")
    return both(box(plus(a), A), conj(box(a, A), box(a, box(plus(a), A))), dir("BoxFixpoint"));
  if (id == "BoxInduction") return {conj(box(a, A), box(plus(a), imp(A, box(a, A)))), box(plus(a), A)};
  if (id == "DiamondChoice_LR") return {dia(choice(a, b), A), disj(dia(a, A), dia(b, A))};
  if (id == "DiamondFixpoint_LR") return {dia(plus(a), A), disj(dia(a, A), dia(a, dia(plus(a), A)))};
  throw Error(Errc::UnknownRule, "unknown axiom '" + id + "'");
}

Sequent expected(const std::string& id, const Params& prm) {
  auto [l, r] = axiom_sides(id, prm);
  return {pdl::translate(l), pdl::translate(r)};
}

ProofPtr derive(const std::string& id, const Params& prm) {
  Sequent want = expected(id, prm);
  install_families();
  Kit k(prm);
  ProofPtr p;
  if (id == "K") p = box_k(k);
  else if (id == "BoxChoice_LR") p = box_choice_lr(k);
  else if (id == "BoxChoice_RL") p = box_choice_rl(k);
  else if (id == "BoxComposition_LR") p = box_composition_lr(k);
  else if (id == "BoxComposition_RL") p = box_composition_rl(k);
  else if (id == "BoxTest_LR") p = box_test_lr(k);
  else if (id == "BoxTest_RL") p = box_test_rl(k);
  else if (id == "BoxDistributivity_LR") p = box_distributivity_lr(k);
  else if (id == "BoxDistributivity_RL") p = box_distributivity_rl(k);
  else if (id == "BoxFixpoint_LR") p = box_fixpoint_lr(k);
  else if (id == "BoxFixpoint_RL") p = box_fixpoint_rl(k);
  else if (id == "BoxInduction") p = box_induction(k, prm);
  else if (id == "DiamondChoice_LR") p = diamond_choice_lr(k);
  else if (id == "DiamondFixpoint_LR") p = diamond_fixpoint_lr(k);
  if (!equal(p->conclusion, want))
    throw Error(Errc::Internal, id + " derives " + render(p->conclusion) + " instead of " + render(want));
  return p;
}

ProofPtr lemma(const std::string& id, int n, const Params& prm) {
  if (n < 1) throw Error(Errc::InvalidArg, "lemma index must be at least 1");
  prm.signature();
  Kit k(prm);
  if (id == "n_to_succ") return n_to_succ(k, n);
  if (id == "n_to_succ_box") return n_to_succ_box(k, n);
  if (id == "chain") return chain(k, n);
  if (id == "plus_unfold") return plus_unfold(k, n, k.A);
  if (id == "plus_chain") return plus_chain(k, n);
  if (id == "induction_premise") return induction_premise(k, n);
  throw Error(Errc::UnknownRule, "unknown lemma '" + id + "'");
}

void install_families() {
  std::call_once(families_once, [] {
    register_family("induction_premise", [](const std::map<std::string, std::string>& params) {
      Params prm;
      if (auto it = params.find("alpha"); it != params.end()) prm.alpha = it->second;
      if (auto it = params.find("A"); it != params.end()) prm.A = it->second;
      Family f;
      f.name = "induction_premise";
      f.params = params;
      f.make = [prm](int n) { return lemma("induction_premise", n, prm); };
      return f;
    });
  });
}

ProofPtr identity(const Term& t) {
  auto id = [](const char* stem, int i, const char* side) { return std::string(stem) + std::to_string(i) + side; };
  sort_of(t);
  const int ix = info(t->op).index;
  switch (t->op) {
    case Op::PropAtom: return axiom("Id_p", {t, t});
    case Op::ActAtom: return axiom("Id_pi", {t, t});
    case Op::Top: return R("top_L", {axiom("top_R", {mk(Op::SI), t})});
    case Op::Bot: return R("bot_R", {axiom("bot_L", {t, mk(Op::SI)})});
    case Op::And: return R("and_L", {R("and_R", {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Or: return R("or_R", {R("or_L", {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Imp: return R("imp_R", {R("imp_L", {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::LImp: return R("limp_R", {R("limp_L", {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::DImp: return R("dimp_L", {R("dimp_R", {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::LDImp: return R("ldimp_L", {R("ldimp_R", {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Fbox0:
    case Op::Fbox1:
      return R(id("fbox", ix, "_R"), {R(id("fbox", ix, "_L"), {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Bbox0:
    case Op::Bbox1:
      return R(id("bbox", ix, "_R"), {R(id("bbox", ix, "_L"), {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Wtri0:
    case Op::Wtri1:
      return R(id("wtri", ix, "_L"), {R(id("wtri", ix, "_R"), {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Btri0:
    case Op::Btri1:
      return R(id("btri", ix, "_L"), {R(id("btri", ix, "_R"), {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Test0:
    case Op::Test1: return R(id("test", ix, "_L"), {R(id("test", ix, "_R"), {Id(t->kids[0])})});
    case Op::Seq1:
    case Op::Seq2:
    case Op::Seq3:
    case Op::Seq4:
      return R(id("seq", ix, "_L"), {R(id("seq", ix, "_R"), {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Cup1:
    case Op::Cup2:
    case Op::Cup3:
    case Op::Cup4:
      return R(id("cup", ix, "_R"), {R(id("cup", ix, "_L"), {Id(t->kids[0]), Id(t->kids[1])})});
    case Op::Plus: return R("plus_L", {R("plus_R", {Id(t->kids[0])})});
    case Op::Minus: return R("minus_R", {R("minus_L", {Id(t->kids[0])})});
    default: break;
  }
  throw Error(Errc::Unsupported, "no identity derivation for " + render(t));
}

}  // namespace pdlmt::corpus
