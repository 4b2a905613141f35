#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rules.hpp"

namespace pdlmt {

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// An omega family: member n proves the n-th premise of an omega rule.  The
// name and parameters are what a proof script records; make regenerates the
// members from them.
struct Family {
  std::string name;
  std::map<std::string, std::string> params;
  std::function<ProofPtr(int)> make;
};

struct Proof {
  enum class Kind { Rule, Omega, Hyp };
  Kind kind = Kind::Rule;
  std::string rule;
  Subst subst;
  std::vector<ProofPtr> kids;  // Omega: materialized members 1..kids.size()
  Family family;
  Sequent conclusion;
};

struct Verdict {
  bool ok = true;
  std::vector<int> path;  // child indices from the root to the failing node
  Errc code = Errc::Internal;
  std::string reason;
  int open_hyps = 0;
};

// Bottom-up validation of every node.  Omega nodes are checked for members
// 1..omega_bound, generating missing members from their family.  Hypotheses
// fail the verdict unless allow_hyps is set.
Verdict check(const ProofPtr& p, int omega_bound, bool allow_hyps = false);

// Smart constructors.  Each validates its own step and throws Error.
ProofPtr apply_rule(const std::string& id, const Subst& s, std::vector<ProofPtr> kids);
// Infers the substitution from the children's conclusions; extra binds the
// metavariables that occur only in the conclusion.
ProofPtr infer(const std::string& id, std::vector<ProofPtr> kids, const Subst& extra = {});
// Axiom instance with the given conclusion.
ProofPtr axiom(const std::string& id, const Sequent& s);
// Application whose conclusion is given; the children must prove the premises.
ProofPtr conclude(const std::string& id, const Sequent& goal, std::vector<ProofPtr> kids, const Subst& extra = {});
ProofPtr hypothesis(const Sequent& s);
ProofPtr omega(const std::string& id, const Subst& s, Family fam, int materialize);

// Family registry used by script loading.
using FamilyFactory = std::function<Family(const std::map<std::string, std::string>&)>;
void register_family(const std::string& name, FamilyFactory f);
std::optional<Family> find_family(const std::string& name, const std::map<std::string, std::string>& params);

// ---------------------------------------------------------------- display

struct DisplayStep {
  std::string rule;
  Subst subst;
  Sequent result;
};

struct DisplayResult {
  bool found = false;
  std::vector<DisplayStep> chain;  // empty when the target is already displayed
  std::size_t explored = 0;
};

// Breadth-first search over display postulates until the substructure at
// path (sequent path, first step picks the side) is a whole side.
DisplayResult display(const Sequent& s, const Path& path, int budget = 64);

// Breadth-first search over display postulates, starting at p's conclusion,
// until target is reached; extends p with the chain.  Throws Errc::Display.
ProofPtr display_to(const ProofPtr& p, const Sequent& target, int budget = 24);

// The same search over an arbitrary rule set (single-premise schemas).
std::optional<std::vector<DisplayStep>> search(const Sequent& from, const std::function<bool(const Sequent&)>& goal,
                                               const std::vector<const Schema*>& rules, int budget,
                                               std::size_t max_states = 200000);

const std::vector<const Schema*>& display_rules();

// ---------------------------------------------------------------- scripts

// JSON lines: a header object, then one object per node; the last node is
// the root.  Shared subproofs are written once.
std::string save_script(const ProofPtr& p, const Signature& sig);
ProofPtr load_script(const std::string& text, Signature* sig_out = nullptr);

// Every sequent occurring in p (members of omega nodes up to omega_bound).
void for_each_sequent(const ProofPtr& p, int omega_bound, const std::function<void(const Sequent&)>& f);
int count_rule(const ProofPtr& p, const std::string& prefix);
int proof_size(const ProofPtr& p);

std::string render_tree(const ProofPtr& p, Format f = Format::Ascii);

}  // namespace pdlmt
