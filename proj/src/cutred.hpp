#pragma once

#include <string>
#include <vector>

#include "kernel.hpp"

namespace pdlmt {

// A cut is principal when both occurrences of its cut term are introduced by
// the last rule of the respective premise.  An atomic cut term counts as
// principal as soon as one premise is an identity axiom.  Throws
// Errc::InvalidArg when node does not address a cut.
bool is_principal(const ProofPtr& p, const Path& node);

// Rewrites the principal cut at node.  The end-sequent is unchanged; the cut
// disappears or is replaced by cuts on proper subterms of its cut term.
// Throws Errc::Unsupported for a principal pair without a transformation.
ProofPtr principal_step(const ProofPtr& p, const Path& node);

// Sizes of the cut terms of every cut in p, largest first.  Omega families
// are not entered.
std::vector<int> cut_ranks(const ProofPtr& p);
// Multiset ordering: true when a is strictly below b.
bool rank_below(const std::vector<int>& a, const std::vector<int>& b);

// Every cut has premises and conclusion of a single structural sort.
bool cuts_strongly_uniform(const ProofPtr& p);

struct CutReport {
  int steps = 0;
  int residual = 0;  // cuts left, none of them principal
  bool fuel_exhausted = false;
  std::vector<std::string> cases;          // connective reduced at each step
  std::vector<std::vector<int>> ranks;     // cut_ranks before each step, then the final one
};

// Applies principal_step to the first principal cut (preorder, left to
// right) until none remains or fuel runs out.
ProofPtr reduce(const ProofPtr& p, int fuel, CutReport* report = nullptr);

// A proof ending in a principal cut on t, built from the left and right
// introduction rules of t's main connective.  Used as reduction fixtures.
ProofPtr principal_cut_fixture(const Term& t);

std::string format_report(const CutReport& r);

}  // namespace pdlmt
