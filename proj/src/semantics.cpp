#include "semantics.hpp"

#include <bit>
#include <sstream>

namespace pdlmt {

WorldSet all_worlds(int k) { return k >= 32 ? ~WorldSet{0} : (WorldSet{1} << k) - 1; }

Rel full_rel(int k) {
  Rel r = 0;
  for (int u = 0; u < k; ++u) r |= static_cast<Rel>(all_worlds(k)) << (u * 8);
  return r;
}

Rel identity_rel(int k) {
  Rel r = 0;
  for (int u = 0; u < k; ++u) r |= pair_bit(u, u);
  return r;
}

Rel compose(Rel r, Rel s, int k) {
  Rel out = 0;
  for (int u = 0; u < k; ++u) {
    WorldSet acc = 0;
    for (WorldSet mid = row(r, u); mid; mid &= mid - 1) acc |= row(s, std::countr_zero(mid));
    out |= static_cast<Rel>(acc) << (u * 8);
  }
  return out;
}

Rel converse(Rel r, int k) {
  Rel out = 0;
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v)
      if (has_pair(r, u, v)) out |= pair_bit(v, u);
  return out;
}

Rel closure_plus(Rel r, int k) {
  // Warshall over row bitmasks.
  WorldSet rows[kMaxWorlds] = {};
  for (int u = 0; u < k; ++u) rows[u] = row(r, u);
  for (int w = 0; w < k; ++w)
    for (int u = 0; u < k; ++u)
      if (rows[u] >> w & 1U) rows[u] |= rows[w];
  Rel out = 0;
  for (int u = 0; u < k; ++u) out |= static_cast<Rel>(rows[u]) << (u * 8);
  return out;
}

bool is_transitive(Rel r, int k) { return (compose(r, r, k) & ~r) == 0; }

Rel KripkeModel::act(const std::string& a) const {
  auto it = acts.find(a);
  return it == acts.end() ? 0 : it->second;
}

WorldSet KripkeModel::prop(const std::string& p) const {
  auto it = props.find(p);
  return it == props.end() ? 0 : it->second;
}

namespace {

[[noreturn]] void model_error(int line, const std::string& msg) {
  throw Error(Errc::Parse, "model line " + std::to_string(line) + ": " + msg);
}

int parse_world(const std::string& s, int k, int line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) model_error(line, "bad world '" + s + "'");
  int w = std::stoi(s);
  if (w >= k) model_error(line, "world " + s + " out of range");
  return w;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

KripkeModel parse_model(std::string_view text, Signature& sig) {
  std::string_view body = split_header(text, sig);
  KripkeModel m;
  bool have_k = false;
  std::istringstream in{std::string(body)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) model_error(lineno, "expected 'name: ...'");
    std::string name = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));
    if (name == "worlds") {
      m.k = parse_world(rest, kMaxWorlds + 1, lineno);
      if (m.k < 1) model_error(lineno, "need at least one world");
      have_k = true;
      continue;
    }
    if (!have_k) model_error(lineno, "'worlds: k' must come first");
    if (m.acts.count(name) || m.props.count(name)) model_error(lineno, "second line for '" + name + "'");
    Sort s = sig.classify(name);
    if (s == Sort::Act) {
      Rel r = 0;
      std::size_t i = 0;
      while (i < rest.size()) {
        if (rest[i] == ' ') {
          ++i;
          continue;
        }
        auto close = rest.find(')', i);
        if (rest[i] != '(' || close == std::string::npos) model_error(lineno, "expected a pair '(u,v)'");
        std::string inner = rest.substr(i + 1, close - i - 1);
        auto comma = inner.find(',');
        if (comma == std::string::npos) model_error(lineno, "expected a pair '(u,v)'");
        r |= pair_bit(parse_world(trim(inner.substr(0, comma)), m.k, lineno),
                      parse_world(trim(inner.substr(comma + 1)), m.k, lineno));
        i = close + 1;
      }
      m.acts[name] = r;
    } else if (s == Sort::Fm) {
      WorldSet w = 0;
      std::istringstream items(rest);
      std::string item;
      while (items >> item) w |= WorldSet{1} << parse_world(item, m.k, lineno);
      m.props[name] = w;
    } else {
      model_error(lineno, "identifier '" + name + "' is declared neither as a proposition nor as an action");
    }
  }
  if (!have_k) throw Error(Errc::Parse, "model has no 'worlds: k' line");
  for (const auto& a : sig.acts)
    if (!m.acts.count(a)) throw Error(Errc::Parse, "model has no line for action '" + a + "'");
  for (const auto& p : sig.props)
    if (!m.props.count(p)) throw Error(Errc::Parse, "model has no line for proposition '" + p + "'");
  return m;
}

std::string format_model(const KripkeModel& m, const Signature& sig) {
  std::ostringstream out;
  out << sig.header() << "\n";
  out << "worlds: " << m.k << "\n";
  for (const auto& a : sig.acts) {
    out << a << ":";
    Rel r = m.act(a);
    for (int u = 0; u < m.k; ++u)
      for (int v = 0; v < m.k; ++v)
        if (has_pair(r, u, v)) out << " (" << u << "," << v << ")";
    out << "\n";
  }
  for (const auto& p : sig.props) {
    out << p << ":";
    WorldSet w = m.prop(p);
    for (int u = 0; u < m.k; ++u)
      if (w >> u & 1U) out << " " << u;
    out << "\n";
  }
  return out.str();
}

KripkeModel random_model(std::mt19937_64& rng, int k, const Signature& sig, double density) {
  std::bernoulli_distribution coin(density);
  std::bernoulli_distribution half(0.5);
  KripkeModel m;
  m.k = k;
  for (const auto& a : sig.acts) {
    Rel r = 0;
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v)
        if (coin(rng)) r |= pair_bit(u, v);
    m.acts[a] = r;
  }
  for (const auto& p : sig.props) {
    WorldSet w = 0;
    for (int u = 0; u < k; ++u)
      if (half(rng)) w |= WorldSet{1} << u;
    m.props[p] = w;
  }
  return m;
}

namespace {

struct Eval {
  const KripkeModel& m;
  int k;

  WorldSet fm(const Term& t) { return static_cast<WorldSet>(go(t)); }
  Rel act(const Term& t) { return go(t); }

  // <R>A: worlds with an R-successor in A.
  WorldSet dia(Rel r, WorldSet a) {
    WorldSet out = 0;
    for (int u = 0; u < k; ++u)
      if (row(r, u) & a) out |= WorldSet{1} << u;
    return out;
  }
  // [R]A: worlds all of whose R-successors are in A.
  WorldSet box(Rel r, WorldSet a) {
    WorldSet out = 0;
    WorldSet all = all_worlds(k);
    for (int u = 0; u < k; ++u)
      if ((row(r, u) & ~a & all) == 0) out |= WorldSet{1} << u;
    return out;
  }
  Rel diag(WorldSet a) {
    Rel r = 0;
    for (int u = 0; u < k; ++u)
      if (a >> u & 1U) r |= pair_bit(u, u);
    return r;
  }
  // a -> b residual: the largest R with a;R inside b.
  Rel succ(Rel a, Rel b) {
    Rel out = 0;
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v) {
        bool ok = true;
        for (int w = 0; w < k && ok; ++w)
          if (has_pair(a, w, u) && !has_pair(b, w, v)) ok = false;
        if (ok) out |= pair_bit(u, v);
      }
    return out;
  }
  // z <- y residual: the largest R with R;y inside z.
  Rel prec(Rel z, Rel y) {
    Rel out = 0;
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v) {
        bool ok = true;
        for (int w = 0; w < k && ok; ++w)
          if (has_pair(y, v, w) && !has_pair(z, u, w)) ok = false;
        if (ok) out |= pair_bit(u, v);
      }
    return out;
  }
  Rel left(WorldSet src, WorldSet dst, bool forward) {
    Rel out = 0;
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v) {
        bool ok = forward ? (!(src >> u & 1U) || (dst >> v & 1U)) : (!(src >> v & 1U) || (dst >> u & 1U));
        if (ok) out |= pair_bit(u, v);
      }
    return out;
  }
  std::uint64_t tact(Rel r, const Term& t) { return t->sort == Sort::TAct ? closure_plus(r, k) : r; }

  std::uint64_t go(const Term& t) {
    const auto& K = t->kids;
    WorldSet all = all_worlds(k);
    switch (t->op) {
      case Op::PropAtom: return m.prop(t->name) & all;
      case Op::ActAtom: return m.act(t->name);
      case Op::Top: return all;
      case Op::Bot: return 0;
      case Op::And: return fm(K[0]) & fm(K[1]);
      case Op::Or: return fm(K[0]) | fm(K[1]);
      case Op::Imp: return (~fm(K[0]) | fm(K[1])) & all;
      case Op::DImp: return fm(K[1]) & ~fm(K[0]);
      case Op::LImp: return (fm(K[0]) | ~fm(K[1])) & all;
      case Op::LDImp: return fm(K[0]) & ~fm(K[1]);
      case Op::Wtri0:
      case Op::Wtri1: return dia(act(K[0]), fm(K[1]));
      case Op::Btri0:
      case Op::Btri1: return dia(converse(act(K[0]), k), fm(K[1]));
      case Op::Fbox0:
      case Op::Fbox1: return box(act(K[0]), fm(K[1]));
      case Op::Bbox0:
      case Op::Bbox1: return box(converse(act(K[0]), k), fm(K[1]));
      case Op::Test0:
      case Op::Test1: return diag(fm(K[0]));
      case Op::Plus: return closure_plus(act(K[0]), k);
      case Op::Minus: return act(K[0]);
      case Op::Seq1:
      case Op::Seq2:
      case Op::Seq3:
      case Op::Seq4: return compose(act(K[0]), act(K[1]), k);
      case Op::Cup1:
      case Op::Cup2:
      case Op::Cup3:
      case Op::Cup4: return act(K[0]) | act(K[1]);
      case Op::RTest0:
      case Op::RTest1: {
        Rel r = act(K[0]);
        WorldSet out = 0;
        for (int u = 0; u < k; ++u)
          if (has_pair(r, u, u)) out |= WorldSet{1} << u;
        return out;
      }
      case Op::Zero0:
      case Op::Zero1: return 0;
      case Op::One0:
      case Op::One1: return identity_rel(k);
      case Op::OSucc1:
      case Op::OSucc2: return succ(act(K[0]), act(K[1]));
      case Op::OPrec1:
      case Op::OPrec3: return prec(act(K[0]), act(K[1]));
      case Op::OResR1:
      case Op::OResR2:
      case Op::OResR3:
      case Op::OResR4: return tact(act(K[1]) & ~act(K[0]), t);
      case Op::OResL1:
      case Op::OResL2:
      case Op::OResL3:
      case Op::OResL4: return tact(act(K[0]) & ~act(K[1]), t);
      // B owleft1 A: pairs whose source in A forces the target into B.
      case Op::OWLeft1: return left(fm(K[1]), fm(K[0]), true);
      // B obleft1 A: pairs whose target in A forces the source into B.
      case Op::OBLeft1: return left(fm(K[1]), fm(K[0]), false);
      default: break;
    }
    throw Error(Errc::InvalidArg, std::string("cannot interpret ") + info(t->op).name + " as an operational term");
  }
};

}  // namespace

Extension interpret(const KripkeModel& m, const Term& t) {
  if (t->sort == Sort::Bad) sort_of(t);
  if (!is_operational(t->sort)) throw Error(Errc::InvalidArg, "interpret expects an operational term");
  if (contains_meta(t)) throw Error(Errc::InvalidArg, "cannot interpret a term with metavariables");
  Eval ev{m, m.k};
  std::uint64_t bits = ev.go(t);
  return t->sort == Sort::Fm ? Extension::worlds(static_cast<WorldSet>(bits)) : Extension::rel(bits);
}

Extension interpret_structure(const KripkeModel& m, const Term& st, Pos pos) {
  Reading r = operational_reading(st, pos);
  if (!r.ok()) return {Extension::Kind::Uninterpretable, 0, r.where};
  return interpret(m, r.term);
}

Truth holds(const KripkeModel& m, const Sequent& s) {
  check_sequent(s);
  Extension a = interpret_structure(m, s.ant, Pos::Ant);
  Extension b = interpret_structure(m, s.suc, Pos::Suc);
  if (!a.ok() || !b.ok()) return Truth::Uninterpretable;
  return (a.bits & ~b.bits) == 0 ? Truth::True : Truth::False;
}

std::string format_extension(const Extension& e, int k) {
  std::ostringstream out;
  switch (e.kind) {
    case Extension::Kind::Uninterpretable: return "uninterpretable at " + path_string(e.where);
    case Extension::Kind::Worlds:
      out << "{";
      for (int u = 0, n = 0; u < k; ++u)
        if (e.bits >> u & 1U) out << (n++ ? " " : "") << u;
      out << "}";
      break;
    case Extension::Kind::Rel:
      out << "{";
      for (int u = 0, n = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
          if (has_pair(e.bits, u, v)) out << (n++ ? " " : "") << "(" << u << "," << v << ")";
      out << "}";
      break;
  }
  return out.str();
}

}  // namespace pdlmt
