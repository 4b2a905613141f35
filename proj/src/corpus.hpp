#pragma once

#include <string>
#include <vector>

#include "kernel.hpp"
#include "pdl.hpp"

namespace pdlmt::corpus {

// Atom names the builders instantiate the axiom schemas with.
struct Params {
  std::string alpha = "a";
  std::string beta = "b";
  std::string A = "p";
  std::string B = "q";
  int omega_bound = 6;

  Signature signature() const;  // throws Errc::InvalidArg on clashing names
};

// Box axioms first, then the diamond ones.
const std::vector<std::string>& axiom_ids();
const std::vector<std::string>& lemma_ids();
bool is_stretch(const std::string& id);

// Translation of the axiom instance: the end-sequent a derivation must have.
Sequent expected(const std::string& id, const Params& prm = {});
// The PDL formulas on either side of the axiom instance.
std::pair<pdl::P, pdl::P> axiom_sides(const std::string& id, const Params& prm = {});

// Derivation of an axiom instance.  Throws Errc::UnknownRule for unknown ids.
ProofPtr derive(const std::string& id, const Params& prm = {});

// Auxiliary derivations indexed by n >= 1 (see lemma_ids).
ProofPtr lemma(const std::string& id, int n, const Params& prm = {});

// Registers the omega family used by the induction derivation so that
// saved scripts can be reloaded.  Idempotent.
void install_families();

// Identity derivation A |- A for an operational term built from rule-bearing
// connectives.
ProofPtr identity(const Term& t);

}  // namespace pdlmt::corpus
