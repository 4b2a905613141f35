#include "term.hpp"

#include <array>
#include <cstring>
#include <functional>

namespace pdlmt {
namespace {

constexpr Sort Bad = Sort::Bad;
constexpr Sort Fm = Sort::Fm;
constexpr Sort Act = Sort::Act;
constexpr Sort TAct = Sort::TAct;
constexpr Sort FM = Sort::FM;
constexpr Sort ACT = Sort::ACT;
constexpr Sort TACT = Sort::TACT;
constexpr Fixity Leaf = Fixity::Leaf;
constexpr Fixity Const = Fixity::Const;
constexpr Fixity Postfix = Fixity::Postfix;
constexpr Fixity Infix = Fixity::Infix;
constexpr Level Atom = Level::Atom;
constexpr Level MetaVar = Level::MetaVar;
constexpr Level Oper = Level::Oper;
constexpr Level Ext = Level::Ext;
constexpr Level Struct = Level::Struct;
constexpr Level Virtual = Level::Virtual;

#define OP(id, ascii, latex, fix, lvl, res, ar, a0, a1, ix, fam, ant, suc, f0, f1) \
  OpInfo{Op::id, #id, ascii, latex, fix, lvl, res, ar, {a0, a1}, ix, fam, Op::ant, Op::suc, f0 != 0, f1 != 0},
const OpInfo kTable[] = {
#include "ops.def"
};
#undef OP

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool accepts(Sort want, Sort got) {
  if (got == Bad) return false;
  if (is_structural(want)) return got == want || got == lower(want);
  return got == want;
}

}  // namespace

const OpInfo& info(Op op) { return kTable[static_cast<std::size_t>(op)]; }
std::size_t op_count() { return sizeof(kTable) / sizeof(kTable[0]); }

bool is_operational(Sort s) { return s == Fm || s == Act || s == TAct; }
bool is_structural(Sort s) { return s == FM || s == ACT || s == TACT; }

Sort lift(Sort s) {
  switch (s) {
    case Fm: return FM;
    case Act: return ACT;
    case TAct: return TACT;
    default: return s;
  }
}

Sort lower(Sort s) {
  switch (s) {
    case FM: return Fm;
    case ACT: return Act;
    case TACT: return TAct;
    default: return s;
  }
}

const char* sort_name(Sort s) {
  switch (s) {
    case Fm: return "Fm";
    case Act: return "Act";
    case TAct: return "TAct";
    case FM: return "FM";
    case ACT: return "ACT";
    case TACT: return "TACT";
    default: return "?";
  }
}

Sort sort_from_name(std::string_view n) {
  for (Sort s : {Fm, Act, TAct, FM, ACT, TACT})
    if (n == sort_name(s)) return s;
  return Bad;
}

static Term finish(Node n) {
  std::size_t h = std::hash<int>{}(static_cast<int>(n.op));
  h = mix(h, std::hash<std::string>{}(n.name));
  h = mix(h, static_cast<std::size_t>(n.msort) * 7 + (n.atom_only ? 1 : 0));
  int size = 1;
  for (const auto& k : n.kids) {
    h = mix(h, k->hash);
    size += k->size;
  }
  n.hash = h;
  n.size = size;
  return std::make_shared<const Node>(std::move(n));
}

Term mk_atom(Sort s, std::string name) {
  Node n;
  if (s == Fm) n.op = Op::PropAtom;
  else if (s == Act) n.op = Op::ActAtom;
  else throw Error(Errc::Sort, "atoms are of sort Fm or Act");
  n.name = std::move(name);
  n.sort = s;
  return finish(std::move(n));
}

Term mk_meta(std::string name, Sort s, bool atom_only) {
  Node n;
  n.op = Op::Meta;
  n.name = std::move(name);
  n.msort = s;
  n.atom_only = atom_only;
  n.sort = s;
  return finish(std::move(n));
}

Term mk(Op op, std::vector<Term> kids) {
  const OpInfo& oi = info(op);
  if (oi.fix == Leaf) throw Error(Errc::Internal, "mk on a leaf connective");
  if (static_cast<int>(kids.size()) != oi.arity)
    throw Error(Errc::Internal, std::string("wrong arity for ") + oi.name);
  Node n;
  n.op = op;
  n.sort = oi.result;
  for (int i = 0; i < oi.arity; ++i)
    if (!accepts(oi.arg[i], kids[i]->sort)) n.sort = Bad;
  n.kids = std::move(kids);
  return finish(std::move(n));
}

bool equal(const Term& a, const Term& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->op != b->op || a->size != b->size) return false;
  if (a->name != b->name || a->msort != b->msort || a->atom_only != b->atom_only) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

bool is_atom(const Term& t) { return t->op == Op::PropAtom || t->op == Op::ActAtom; }
bool is_meta(const Term& t) { return t->op == Op::Meta; }

bool is_leaf_operational(const Term& t) { return is_operational(t->sort); }

bool contains_virtual(const Term& t) {
  if (info(t->op).level == Virtual) return true;
  for (const auto& k : t->kids)
    if (contains_virtual(k)) return true;
  return false;
}

bool contains_meta(const Term& t) {
  if (t->op == Op::Meta) return true;
  for (const auto& k : t->kids)
    if (contains_meta(k)) return true;
  return false;
}

bool equal(const Sequent& a, const Sequent& b) { return equal(a.ant, b.ant) && equal(a.suc, b.suc); }

std::size_t hash_of(const Sequent& s) { return mix(s.ant->hash, s.suc->hash * 31 + 17); }

int het_index(Sort s) {
  switch (s) {
    case Act:
    case ACT: return 1;
    case TAct:
    case TACT: return 0;
    default: return -1;
  }
}

int pair_index(Sort a, Sort b) {
  bool ta = het_index(a) == 0, tb = het_index(b) == 0;
  if (het_index(a) < 0 || het_index(b) < 0) return -1;
  if (!ta && !tb) return 1;
  if (ta && !tb) return 2;
  if (!ta && tb) return 3;
  return 4;
}

Op indexed(std::string_view family, int index) {
  for (const auto& oi : kTable)
    if (oi.index == index && family == oi.family) return oi.op;
  return Op::None;
}

}  // namespace pdlmt
