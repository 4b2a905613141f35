#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdlmt {

enum class Sort : std::uint8_t { Fm, Act, TAct, FM, ACT, TACT, Bad };

enum class Fixity : std::uint8_t { Leaf, Const, Postfix, Infix };

// Atom and MetaVar are leaves.  Oper terms belong to the calculus; Ext terms
// are operational readings of structures that have no rules of their own.
enum class Level : std::uint8_t { Atom, MetaVar, Oper, Ext, Struct, Virtual };

enum class Op : std::uint16_t {
#define OP(id, ...) id,
#include "ops.def"
#undef OP
  None
};

struct OpInfo {
  Op op;
  const char* name;
  const char* ascii;
  const char* latex;
  Fixity fix;
  Level level;
  Sort result;
  int arity;
  Sort arg[2];
  int index;
  const char* family;
  Op ant_reading;
  Op suc_reading;
  bool flip[2];
};

const OpInfo& info(Op op);
std::size_t op_count();

bool is_operational(Sort s);
bool is_structural(Sort s);
Sort lift(Sort s);   // Fm -> FM, identity on structural sorts
Sort lower(Sort s);  // FM -> Fm, identity on operational sorts
const char* sort_name(Sort s);
Sort sort_from_name(std::string_view name);  // Sort::Bad when unknown

// Error carried through the library and mapped onto C status codes.
enum class Errc : int {
  Parse = 1,
  Sort = 2,
  TypeMismatch = 3,
  UnknownRule = 4,
  BadMatch = 5,
  Omega = 6,
  Display = 7,
  InvalidArg = 8,
  Io = 9,
  Unsupported = 10,
  Internal = 11,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

struct Node;
using Term = std::shared_ptr<const Node>;

// Metavariables carry a declared sort; the atom flag restricts a Fm or Act
// metavariable to atomic instances (the p and pi of the identity axioms).
struct Node {
  Op op;
  std::string name;
  Sort msort = Sort::Bad;
  bool atom_only = false;
  std::vector<Term> kids;
  Sort sort = Sort::Bad;
  std::size_t hash = 0;
  int size = 1;
};

Term mk_atom(Sort s, std::string name);  // s is Fm or Act
Term mk_meta(std::string name, Sort s, bool atom_only = false);
Term mk(Op op, std::vector<Term> kids = {});
inline Term mk(Op op, Term a) { return mk(op, std::vector<Term>{std::move(a)}); }
inline Term mk(Op op, Term a, Term b) { return mk(op, std::vector<Term>{std::move(a), std::move(b)}); }

bool equal(const Term& a, const Term& b);
bool is_atom(const Term& t);
bool is_meta(const Term& t);
bool is_leaf_operational(const Term& t);  // operational term used as a structure leaf
bool contains_virtual(const Term& t);
bool contains_meta(const Term& t);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t ? t->hash : 0; }
};
struct TermEq {
  bool operator()(const Term& a, const Term& b) const { return equal(a, b); }
};

struct Sequent {
  Term ant;
  Term suc;
};

bool equal(const Sequent& a, const Sequent& b);
std::size_t hash_of(const Sequent& s);

struct SequentHash {
  std::size_t operator()(const Sequent& s) const noexcept { return hash_of(s); }
};
struct SequentEq {
  bool operator()(const Sequent& a, const Sequent& b) const { return equal(a, b); }
};

// Indexed families used by the corpus: sort-directed selection of indexed
// connectives.  idx(ACT|Act)=1 and idx(TACT|TAct)=0 for the heterogeneous ones;
// pair_index gives j for ;j, cupj, btwj from the sorts of the two children.
int het_index(Sort s);
int pair_index(Sort a, Sort b);
Op indexed(std::string_view family, int index);  // Op::None when absent

}  // namespace pdlmt
