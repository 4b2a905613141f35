#pragma once

#include <optional>
#include <string>
#include <vector>

#include "term.hpp"

namespace pdlmt {

enum class Pos { Ant, Suc };

inline Pos flip(Pos p) { return p == Pos::Ant ? Pos::Suc : Pos::Ant; }
const char* pos_name(Pos p);

// A path is a list of child indices.  In a sequent path the first step picks
// the side (0 antecedent, 1 succedent).
using Path = std::vector<int>;

std::string path_string(const Path& p);  // "0.1.0", or "root" when empty
Path parse_path(const std::string& s);

// Sort of a well-formed node; throws Errc::Sort naming the offending path.
Sort sort_of(const Term& t);

struct TypedSequent {
  Sequent seq;
  Sort sort;  // structural sort shared by both sides
};

// Throws Errc::Sort for an ill-sorted side and Errc::TypeMismatch when the
// two sides have different sorts.
TypedSequent check_sequent(const Sequent& s);
bool is_type_uniform(const Sequent& s);

struct SubEntry {
  Path path;
  Term term;
  Pos pos;
};

// Preorder enumeration of every structural node and every operational leaf,
// with the position each occupies.  Operational leaves are not descended into.
std::vector<SubEntry> substructures(const Term& s, Pos root);
std::vector<SubEntry> substructures(const Sequent& s);  // paths start with the side

Term subterm_at(const Term& t, const Path& p, std::size_t from = 0);
Term subterm_at(const Sequent& s, const Path& p);
Pos position_at(const Sequent& s, const Path& p);
Term replace_at(const Term& t, const Path& p, const Term& repl, std::size_t from = 0);
Sequent replace_at(const Sequent& s, const Path& p, const Term& repl);

// Operational reading of a structure at a position.  A structural connective
// with a blank cell at that position, or a virtual one, makes the reading
// undefined; the result then carries the path to the first such node.
struct Reading {
  Term term;   // null when uninterpretable
  Path where;  // path to the blocking node
  bool ok() const { return term != nullptr; }
};

Reading operational_reading(const Term& st, Pos pos);

}  // namespace pdlmt
