#include "pdl.hpp"

#include <cctype>

namespace pdlmt::pdl {

bool is_action(Kind k) { return k >= Kind::Act; }

namespace {
P node(Kind k, std::string name, std::vector<P> kids = {}) {
  return std::make_shared<const PNode>(PNode{k, std::move(name), std::move(kids)});
}
}  // namespace

P prop(std::string name) { return node(Kind::Prop, std::move(name)); }
P act(std::string name) { return node(Kind::Act, std::move(name)); }
P top() { return node(Kind::Top, ""); }
P bot() { return node(Kind::Bot, ""); }
P neg(P a) { return node(Kind::Neg, "", {std::move(a)}); }
P conj(P a, P b) { return node(Kind::And, "", {std::move(a), std::move(b)}); }
P disj(P a, P b) { return node(Kind::Or, "", {std::move(a), std::move(b)}); }
P imp(P a, P b) {
  if (b->kind == Kind::Bot) return neg(std::move(a));
  return node(Kind::Imp, "", {std::move(a), std::move(b)});
}
P dia(P alpha, P a) { return node(Kind::Dia, "", {std::move(alpha), std::move(a)}); }
P box(P alpha, P a) { return node(Kind::Box, "", {std::move(alpha), std::move(a)}); }
P back_dia(P alpha, P a) { return node(Kind::BackDia, "", {std::move(alpha), std::move(a)}); }
P back_box(P alpha, P a) { return node(Kind::BackBox, "", {std::move(alpha), std::move(a)}); }
P seq(P a, P b) { return node(Kind::Seq, "", {std::move(a), std::move(b)}); }
P choice(P a, P b) { return node(Kind::Choice, "", {std::move(a), std::move(b)}); }
P test(P a) { return node(Kind::Test, "", {std::move(a)}); }
P plus(P a) { return node(Kind::Plus, "", {std::move(a)}); }

bool equal(const P& a, const P& b) {
  if (a->kind != b->kind || a->name != b->name || a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Tok {
  std::string text;
  std::size_t col;
  bool ident;
};

std::vector<Tok> lex(std::string_view s) {
  static const char* kSym[] = {"->", "(", ")", "<", ">", "[", "]", "~", "&", "|", ";", "?", "+"};
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({std::string(s.substr(i, j - i)), i + 1, true});
      i = j;
      continue;
    }
    bool hit = false;
    for (const char* sym : kSym) {
      std::string_view v(sym);
      if (s.substr(i, v.size()) == v) {
        out.push_back({std::string(v), i + 1, false});
        i += v.size();
        hit = true;
        break;
      }
    }
    if (!hit) throw Error(Errc::Parse, "parse error at column " + std::to_string(i + 1) + ": unexpected '" + s[i] + "'");
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<Tok> toks, const Signature& sig, Options opt, std::size_t len)
      : toks_(std::move(toks)), sig_(sig), opt_(opt), len_(len) {}

  P formula_top() {
    P f = formula();
    if (pos_ != toks_.size()) fail("trailing input");
    return f;
  }

 private:
  std::vector<Tok> toks_;
  const Signature& sig_;
  Options opt_;
  std::size_t len_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t col = pos_ < toks_.size() ? toks_[pos_].col : len_ + 1;
    throw Error(Errc::Parse, "parse error at column " + std::to_string(col) + ": " + what);
  }
  bool at(const char* t) const { return pos_ < toks_.size() && !toks_[pos_].ident && toks_[pos_].text == t; }
  bool at_word(const char* t) const { return pos_ < toks_.size() && toks_[pos_].ident && toks_[pos_].text == t; }
  void expect(const char* t) {
    if (!at(t)) fail(std::string("expected '") + t + "'");
    ++pos_;
  }

  P formula() {
    P left = disjunction();
    if (at("->")) {
      ++pos_;
      return imp(left, formula());
    }
    return left;
  }
  P disjunction() {
    P left = conjunction();
    while (at("|")) {
      ++pos_;
      left = disj(left, conjunction());
    }
    return left;
  }
  P conjunction() {
    P left = unary();
    while (at("&")) {
      ++pos_;
      left = conj(left, unary());
    }
    return left;
  }
  P modality(const char* close, Kind fwd, Kind back) {
    ++pos_;
    P alpha = action();
    Kind k = fwd;
    if (at("~")) {
      if (!opt_.back_modalities) fail("backward modalities are disabled");
      ++pos_;
      k = back;
    }
    expect(close);
    return node(k, "", {alpha, unary()});
  }
  P unary() {
    if (at("~")) {
      ++pos_;
      return neg(unary());
    }
    if (at("<")) return modality(">", Kind::Dia, Kind::BackDia);
    if (at("[")) return modality("]", Kind::Box, Kind::BackBox);
    return primary();
  }
  P primary() {
    if (at("(")) {
      ++pos_;
      P f = formula();
      expect(")");
      return f;
    }
    if (at_word("top")) {
      ++pos_;
      return top();
    }
    if (at_word("bot")) {
      ++pos_;
      return bot();
    }
    if (pos_ < toks_.size() && toks_[pos_].ident) {
      const std::string& name = toks_[pos_].text;
      Sort s = sig_.classify(name);
      if (s == Sort::Fm) {
        ++pos_;
        return prop(name);
      }
      if (s == Sort::Act) fail("action '" + name + "' used as a formula");
      fail("identifier '" + name + "' is declared neither as a proposition nor as an action");
    }
    fail("expected a formula");
  }

  P action() {
    P left = sequence();
    while (at_word("cup")) {
      ++pos_;
      left = choice(left, sequence());
    }
    return left;
  }
  P sequence() {
    P left = postfix();
    while (at(";")) {
      ++pos_;
      left = seq(left, postfix());
    }
    return left;
  }
  P postfix() {
    P a = action_primary();
    for (;;) {
      if (at("+")) {
        ++pos_;
        a = plus(a);
      } else if (at("?")) {
        fail("test applied to an action");
      } else {
        return a;
      }
    }
  }
  P action_primary() {
    if (pos_ < toks_.size() && toks_[pos_].ident && sig_.classify(toks_[pos_].text) == Sort::Act)
      return act(toks_[pos_++].text);
    if (at("(")) {
      std::size_t save = pos_;
      try {
        ++pos_;
        P a = action();
        expect(")");
        return a;
      } catch (const Error&) {
        pos_ = save;
      }
    }
    P f = unary();
    expect("?");
    return test(f);
  }
};

bool atomic(const P& n) {
  return n->kids.empty() || n->kind == Kind::Neg || n->kind == Kind::Plus || n->kind == Kind::Test ||
         n->kind == Kind::Dia || n->kind == Kind::Box || n->kind == Kind::BackDia || n->kind == Kind::BackBox;
}

std::string wrap(const P& n) { return atomic(n) ? render(n) : "(" + render(n) + ")"; }

}  // namespace

P parse(std::string_view text, const Signature& sig, Options opt) {
  return Parser(lex(text), sig, opt, text.size()).formula_top();
}

std::string render(const P& n) {
  const auto& k = n->kids;
  switch (n->kind) {
    case Kind::Prop:
    case Kind::Act: return n->name;
    case Kind::Top: return "top";
    case Kind::Bot: return "bot";
    case Kind::Neg: return "~" + wrap(k[0]);
    case Kind::And: return wrap(k[0]) + " & " + wrap(k[1]);
    case Kind::Or: return wrap(k[0]) + " | " + wrap(k[1]);
    case Kind::Imp: return wrap(k[0]) + " -> " + wrap(k[1]);
    case Kind::Dia: return "<" + render(k[0]) + ">" + wrap(k[1]);
    case Kind::Box: return "[" + render(k[0]) + "]" + wrap(k[1]);
    case Kind::BackDia: return "<" + wrap(k[0]) + "~>" + wrap(k[1]);
    case Kind::BackBox: return "[" + wrap(k[0]) + "~]" + wrap(k[1]);
    case Kind::Seq: return wrap(k[0]) + " ; " + wrap(k[1]);
    case Kind::Choice: return wrap(k[0]) + " cup " + wrap(k[1]);
    case Kind::Test: return (k[0]->kids.empty() ? render(k[0]) : "(" + render(k[0]) + ")") + "?";
    case Kind::Plus: return wrap(k[0]) + "+";
  }
  return "";
}

// ---------------------------------------------------------------- semantics

Rel eval_action(const KripkeModel& m, const P& a) {
  const auto& k = a->kids;
  switch (a->kind) {
    case Kind::Act: return m.act(a->name);
    case Kind::Seq: return compose(eval_action(m, k[0]), eval_action(m, k[1]), m.k);
    case Kind::Choice: return eval_action(m, k[0]) | eval_action(m, k[1]);
    case Kind::Test: {
      WorldSet w = eval(m, k[0]);
      Rel r = 0;
      for (int u = 0; u < m.k; ++u)
        if (w >> u & 1U) r |= pair_bit(u, u);
      return r;
    }
    case Kind::Plus: return closure_plus(eval_action(m, k[0]), m.k);
    default: throw Error(Errc::InvalidArg, "formula where an action was expected");
  }
}

WorldSet eval(const KripkeModel& m, const P& a) {
  const auto& k = a->kids;
  WorldSet all = all_worlds(m.k);
  auto forall = [&](Rel r, WorldSet b) {
    WorldSet out = 0;
    for (int u = 0; u < m.k; ++u) {
      bool ok = true;
      for (int v = 0; v < m.k; ++v)
        if (has_pair(r, u, v) && !(b >> v & 1U)) ok = false;
      if (ok) out |= WorldSet{1} << u;
    }
    return out;
  };
  auto exists = [&](Rel r, WorldSet b) {
    WorldSet out = 0;
    for (int u = 0; u < m.k; ++u)
      for (int v = 0; v < m.k; ++v)
        if (has_pair(r, u, v) && (b >> v & 1U)) out |= WorldSet{1} << u;
    return out;
  };
  switch (a->kind) {
    case Kind::Prop: return m.prop(a->name) & all;
    case Kind::Top: return all;
    case Kind::Bot: return 0;
    case Kind::Neg: return ~eval(m, k[0]) & all;
    case Kind::And: return eval(m, k[0]) & eval(m, k[1]);
    case Kind::Or: return eval(m, k[0]) | eval(m, k[1]);
    case Kind::Imp: return (~eval(m, k[0]) | eval(m, k[1])) & all;
    case Kind::Dia: return exists(eval_action(m, k[0]), eval(m, k[1]));
    case Kind::Box: return forall(eval_action(m, k[0]), eval(m, k[1]));
    case Kind::BackDia: return exists(converse(eval_action(m, k[0]), m.k), eval(m, k[1]));
    case Kind::BackBox: return forall(converse(eval_action(m, k[0]), m.k), eval(m, k[1]));
    default: throw Error(Errc::InvalidArg, "action where a formula was expected");
  }
}

// ---------------------------------------------------------------- translation

Term translate(const P& n) {
  const auto& k = n->kids;
  auto modal = [&](const char* family) {
    Term alpha = translate(k[0]);
    return mk(indexed(family, het_index(alpha->sort)), alpha, translate(k[1]));
  };
  auto pair = [&](const char* family) {
    Term l = translate(k[0]), r = translate(k[1]);
    return mk(indexed(family, pair_index(l->sort, r->sort)), l, r);
  };
  switch (n->kind) {
    case Kind::Prop: return mk_atom(Sort::Fm, n->name);
    case Kind::Act: return mk_atom(Sort::Act, n->name);
    case Kind::Top: return mk(Op::Top);
    case Kind::Bot: return mk(Op::Bot);
    case Kind::Neg: return mk(Op::Imp, translate(k[0]), mk(Op::Bot));
    case Kind::And: return mk(Op::And, translate(k[0]), translate(k[1]));
    case Kind::Or: return mk(Op::Or, translate(k[0]), translate(k[1]));
    case Kind::Imp: return mk(Op::Imp, translate(k[0]), translate(k[1]));
    case Kind::Dia: return modal("wtri");
    case Kind::Box: return modal("fbox");
    case Kind::BackDia: return modal("btri");
    case Kind::BackBox: return modal("bbox");
    case Kind::Seq: return pair(";");
    case Kind::Choice: return pair("cup");
    case Kind::Test: return mk(Op::Test1, translate(k[0]));
    case Kind::Plus: {
      Term a = translate(k[0]);
      return mk(Op::Plus, a->sort == Sort::TAct ? mk(Op::Minus, a) : a);
    }
  }
  throw Error(Errc::Internal, "unhandled PDL node");
}

std::optional<P> erase(const Term& t) {
  const auto& k = t->kids;
  auto two = [&](auto make) -> std::optional<P> {
    auto a = erase(k[0]);
    auto b = erase(k[1]);
    if (!a || !b) return std::nullopt;
    return make(*a, *b);
  };
  switch (t->op) {
    case Op::PropAtom: return prop(t->name);
    case Op::ActAtom: return act(t->name);
    case Op::Top: return top();
    case Op::Bot: return bot();
    case Op::And: return two(conj);
    case Op::Or: return two(disj);
    case Op::Imp: return two(imp);
    case Op::Wtri0:
    case Op::Wtri1: return two(dia);
    case Op::Fbox0:
    case Op::Fbox1: return two(box);
    case Op::Btri0:
    case Op::Btri1: return two(back_dia);
    case Op::Bbox0:
    case Op::Bbox1: return two(back_box);
    case Op::Seq1:
    case Op::Seq2:
    case Op::Seq3:
    case Op::Seq4: return two(seq);
    case Op::Cup1:
    case Op::Cup2:
    case Op::Cup3:
    case Op::Cup4: return two(choice);
    case Op::Test1: {
      auto a = erase(k[0]);
      if (!a) return std::nullopt;
      return test(*a);
    }
    case Op::Plus: {
      const Term& inner = k[0]->op == Op::Minus ? k[0]->kids[0] : k[0];
      if (k[0]->op == Op::Minus && inner->op != Op::Plus) return std::nullopt;
      auto a = erase(inner);
      if (!a) return std::nullopt;
      return plus(*a);
    }
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------- generator

namespace {

template <class Set>
std::string pick(std::mt19937_64& rng, const Set& s) {
  std::uniform_int_distribution<std::size_t> d(0, s.size() - 1);
  auto it = s.begin();
  std::advance(it, d(rng));
  return *it;
}

P random_action(std::mt19937_64& rng, int depth, const Signature& sig, bool back);

P random_fm(std::mt19937_64& rng, int depth, const Signature& sig, bool back) {
  std::uniform_int_distribution<int> leaf(0, 9);
  if (depth <= 0) {
    int r = leaf(rng);
    if (r == 0) return top();
    if (r == 1) return bot();
    return prop(pick(rng, sig.props));
  }
  std::uniform_int_distribution<int> choice_d(0, back ? 10 : 8);
  switch (choice_d(rng)) {
    case 0: return prop(pick(rng, sig.props));
    case 1: return neg(random_fm(rng, depth - 1, sig, back));
    case 2: return conj(random_fm(rng, depth - 1, sig, back), random_fm(rng, depth - 1, sig, back));
    case 3: return disj(random_fm(rng, depth - 1, sig, back), random_fm(rng, depth - 1, sig, back));
    case 4: return imp(random_fm(rng, depth - 1, sig, back), random_fm(rng, depth - 1, sig, back));
    case 5:
    case 6: return dia(random_action(rng, depth - 1, sig, back), random_fm(rng, depth - 1, sig, back));
    case 7:
    case 8: return box(random_action(rng, depth - 1, sig, back), random_fm(rng, depth - 1, sig, back));
    case 9: return back_dia(random_action(rng, depth - 1, sig, back), random_fm(rng, depth - 1, sig, back));
    default: return back_box(random_action(rng, depth - 1, sig, back), random_fm(rng, depth - 1, sig, back));
  }
}

P random_action(std::mt19937_64& rng, int depth, const Signature& sig, bool back) {
  if (depth <= 0) return act(pick(rng, sig.acts));
  std::uniform_int_distribution<int> d(0, 5);
  switch (d(rng)) {
    case 0:
    case 1: return act(pick(rng, sig.acts));
    case 2: return seq(random_action(rng, depth - 1, sig, back), random_action(rng, depth - 1, sig, back));
    case 3: return choice(random_action(rng, depth - 1, sig, back), random_action(rng, depth - 1, sig, back));
    case 4: return test(random_fm(rng, depth - 1, sig, back));
    default: return plus(random_action(rng, depth - 1, sig, back));
  }
}

}  // namespace

P random_formula(std::mt19937_64& rng, int depth, const Signature& sig, bool back_modalities) {
  return random_fm(rng, depth, sig, back_modalities);
}

}  // namespace pdlmt::pdl
