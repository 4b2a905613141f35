#pragma once

#include <string>
#include <vector>

#include "kernel.hpp"

namespace pdlmt {

// A derivation of a derived schema from its premises (as hypotheses) using
// display postulates and the primitive rules of its own rule table, plus
// exchange, weakening and unit rules from the propositional base.
struct Simulation {
  std::string id;
  bool ok = false;
  int steps = 0;       // rule applications, omega members counted once
  std::string basis;   // primitive rule the simulation hinges on
  std::string reason;  // why the search failed
  ProofPtr proof;      // checks with allow_hyps; omega families at bound 3
};

Simulation simulate(const Schema& r, int budget = 32);
std::vector<Simulation> simulate_derived(int budget = 32);

}  // namespace pdlmt
