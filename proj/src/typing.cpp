#include "typing.hpp"

#include <sstream>

namespace pdlmt {

const char* pos_name(Pos p) { return p == Pos::Ant ? "ant" : "suc"; }

std::string path_string(const Path& p) {
  if (p.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "." : "") + std::to_string(p[i]);
  return out;
}

Path parse_path(const std::string& s) {
  Path p;
  if (s.empty() || s == "root") return p;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, '.')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::Parse, "bad path '" + s + "'");
    p.push_back(std::stoi(item));
  }
  return p;
}

namespace {

void locate_bad(const Term& t, Path& at) {
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    if (t->kids[i]->sort == Sort::Bad) {
      at.push_back(static_cast<int>(i));
      locate_bad(t->kids[i], at);
      return;
    }
  }
}

}  // namespace

Sort sort_of(const Term& t) {
  if (t->sort != Sort::Bad) return t->sort;
  Path at;
  locate_bad(t, at);
  Term bad = subterm_at(t, at);
  std::string msg = "ill-sorted node at " + path_string(at) + ": " + info(bad->op).name + " expects (";
  const OpInfo& oi = info(bad->op);
  for (int i = 0; i < oi.arity; ++i) msg += std::string(i ? ", " : "") + sort_name(oi.arg[i]);
  msg += ") but got (";
  for (int i = 0; i < oi.arity; ++i) msg += std::string(i ? ", " : "") + sort_name(bad->kids[i]->sort);
  throw Error(Errc::Sort, msg + ")");
}

TypedSequent check_sequent(const Sequent& s) {
  Sort a = lift(sort_of(s.ant));
  Sort b = lift(sort_of(s.suc));
  if (a != b) throw Error(Errc::TypeMismatch, std::string("type mismatch: ") + sort_name(a) + " |- " + sort_name(b));
  return {s, a};
}

bool is_type_uniform(const Sequent& s) {
  return s.ant->sort != Sort::Bad && s.suc->sort != Sort::Bad && lift(s.ant->sort) == lift(s.suc->sort);
}

static void walk(const Term& t, Pos pos, Path& path, std::vector<SubEntry>& out) {
  out.push_back({path, t, pos});
  if (is_operational(t->sort) || t->op == Op::Meta) return;
  const OpInfo& oi = info(t->op);
  for (int i = 0; i < oi.arity; ++i) {
    path.push_back(i);
    walk(t->kids[i], oi.flip[i] ? flip(pos) : pos, path, out);
    path.pop_back();
  }
}

std::vector<SubEntry> substructures(const Term& s, Pos root) {
  std::vector<SubEntry> out;
  Path p;
  walk(s, root, p, out);
  return out;
}

std::vector<SubEntry> substructures(const Sequent& s) {
  std::vector<SubEntry> out;
  Path p{0};
  walk(s.ant, Pos::Ant, p, out);
  p = {1};
  walk(s.suc, Pos::Suc, p, out);
  return out;
}

Term subterm_at(const Term& t, const Path& p, std::size_t from) {
  Term cur = t;
  for (std::size_t i = from; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= static_cast<int>(cur->kids.size()))
      throw Error(Errc::InvalidArg, "path " + path_string(p) + " does not resolve");
    cur = cur->kids[p[i]];
  }
  return cur;
}

Term subterm_at(const Sequent& s, const Path& p) {
  if (p.empty() || (p[0] != 0 && p[0] != 1)) throw Error(Errc::InvalidArg, "sequent path must start with 0 or 1");
  return subterm_at(p[0] == 0 ? s.ant : s.suc, p, 1);
}

Pos position_at(const Sequent& s, const Path& p) {
  if (p.empty() || (p[0] != 0 && p[0] != 1)) throw Error(Errc::InvalidArg, "sequent path must start with 0 or 1");
  Pos pos = p[0] == 0 ? Pos::Ant : Pos::Suc;
  Term cur = p[0] == 0 ? s.ant : s.suc;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= static_cast<int>(cur->kids.size()))
      throw Error(Errc::InvalidArg, "path " + path_string(p) + " does not resolve");
    if (info(cur->op).flip[p[i]]) pos = flip(pos);
    cur = cur->kids[p[i]];
  }
  return pos;
}

Term replace_at(const Term& t, const Path& p, const Term& repl, std::size_t from) {
  if (from == p.size()) return repl;
  if (p[from] < 0 || p[from] >= static_cast<int>(t->kids.size()))
    throw Error(Errc::InvalidArg, "path " + path_string(p) + " does not resolve");
  std::vector<Term> kids = t->kids;
  kids[p[from]] = replace_at(kids[p[from]], p, repl, from + 1);
  return mk(t->op, std::move(kids));
}

Sequent replace_at(const Sequent& s, const Path& p, const Term& repl) {
  if (p.empty() || (p[0] != 0 && p[0] != 1)) throw Error(Errc::InvalidArg, "sequent path must start with 0 or 1");
  if (p[0] == 0) return {replace_at(s.ant, p, repl, 1), s.suc};
  return {s.ant, replace_at(s.suc, p, repl, 1)};
}

static Term read(const Term& st, Pos pos, Path& path, Path& where) {
  if (is_operational(st->sort)) return st;
  const OpInfo& oi = info(st->op);
  Op target = pos == Pos::Ant ? oi.ant_reading : oi.suc_reading;
  if (st->op == Op::Meta || target == Op::None) {
    where = path;
    return nullptr;
  }
  std::vector<Term> kids;
  for (int i = 0; i < oi.arity; ++i) {
    path.push_back(i);
    Term k = read(st->kids[i], oi.flip[i] ? flip(pos) : pos, path, where);
    path.pop_back();
    if (!k) return nullptr;
    kids.push_back(std::move(k));
  }
  return mk(target, std::move(kids));
}

Reading operational_reading(const Term& st, Pos pos) {
  Path path, where;
  Term t = read(st, pos, path, where);
  return {t, t ? Path{} : where};
}

}  // namespace pdlmt
