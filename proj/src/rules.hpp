#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syntax.hpp"
#include "typing.hpp"

namespace pdlmt {

using Subst = std::map<std::string, Term>;

struct Schema {
  std::string id;
  std::string group;  // rule table the schema belongs to
  MetaDecls metas;
  std::vector<Sequent> premises;
  Sequent conclusion;

  bool derived = false;
  bool display = false;     // display postulate (either direction)
  bool is_virtual = false;  // mentions a virtual adjoint
  bool invertible = false;  // one half of a double-line rule
  bool is_cut = false;
  std::string inverse;      // id of the other half

  // Omega schemas have one premise pattern; member n of the family replaces
  // the omega metavariable by its n-th structural power.
  std::string omega_meta;
  bool is_omega() const { return !omega_meta.empty(); }

  // Side of the conclusion holding the introduced operational term:
  // 0 antecedent, 1 succedent, 2 both (identity), -1 structural rule.
  int principal_side = -1;
};

const std::vector<Schema>& catalog();
const Schema* find_schema(std::string_view id);
const Schema& schema(std::string_view id);  // throws Errc::UnknownRule

// Syntactic first-order matching of a pattern against a term.  Metavariables
// in the term are treated as constants.
bool match(const Term& pat, const Term& t, Subst& s);
bool match(const Sequent& pat, const Sequent& t, Subst& s);
std::vector<Subst> match_conclusion(const Schema& r, const Sequent& s);

// Throws Errc::BadMatch naming the first unbound metavariable.
Term instantiate(const Term& pat, const Subst& s);
Sequent instantiate(const Sequent& pat, const Subst& s);

// Pi^(1) = Pi, Pi^(n+1) = Pi ;b1 Pi^(n).
Term power(const Term& pi, int n);

// Instantiated premises.  Omega schemas need omega_bound >= 1 and yield
// members 1..omega_bound; Errc::Omega otherwise.
std::vector<Sequent> premises_of(const Schema& r, const Subst& s, int omega_bound = 0);
Sequent omega_member(const Schema& r, const Subst& s, int n);

std::string render_schema(const Schema& r);

struct ConditionReport {
  std::string id;
  std::vector<std::pair<std::string, bool>> checks;  // in a fixed order
  std::vector<std::string> notes;
  bool all_pass() const;
};

// Machine-checkable conditions: wf (every pattern type-uniform), C1, C2, C'2,
// C3, C4, C5 and, for cut schemas, C10.
ConditionReport audit_schema(const Schema& r);

}  // namespace pdlmt
