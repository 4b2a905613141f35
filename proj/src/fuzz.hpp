#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rules.hpp"
#include "semantics.hpp"

namespace pdlmt {

struct FuzzConfig {
  std::uint64_t seed = 1;
  int trials = 1000;
  int max_worlds = 4;       // models have 1..max_worlds worlds
  int max_depth = 3;        // substitution depth
  int models_per_trial = 8; // models tried before a trial counts as vacuous
  std::string schema;       // restrict to one schema id; empty means all non-virtual
};

struct Counterexample {
  std::string schema;
  std::vector<std::pair<std::string, std::string>> subst;
  std::string model;
  std::vector<std::string> premises;
  std::string conclusion;
};

struct FuzzReport {
  int trials = 0;
  int checked = 0;   // all premises held and the conclusion was evaluated
  int vacuous = 0;   // some premise failed in every model tried
  int skipped = 0;   // some instantiated sequent had no operational reading
  std::vector<Counterexample> counterexamples;
};

// Random ground instance of a metavariable of the given sort over a pool of
// two propositions and two actions.  With a position, structural connectives
// are drawn only among those that have an operational reading there.
Term random_term(std::mt19937_64& rng, Sort s, int depth, bool atom_only = false,
                 std::optional<Pos> pos = std::nullopt);

FuzzReport fuzz(const FuzzConfig& cfg);
FuzzReport fuzz(const FuzzConfig& cfg, const std::vector<const Schema*>& schemas);

// abs4 with the sides of its first premise exchanged; unsound by design.
const Schema& abs4_mutant();

std::string format_report(const FuzzReport& r);

}  // namespace pdlmt
