#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "syntax.hpp"
#include "typing.hpp"

namespace pdlmt {

// Worlds are 0..k-1 with k <= kMaxWorlds.  A world set is a bitmask; a
// relation packs row u into bits [8u, 8u+8).
constexpr int kMaxWorlds = 8;
using WorldSet = std::uint32_t;
using Rel = std::uint64_t;

inline Rel pair_bit(int u, int v) { return Rel{1} << (u * 8 + v); }
inline bool has_pair(Rel r, int u, int v) { return (r >> (u * 8 + v)) & 1U; }
inline WorldSet row(Rel r, int u) { return static_cast<WorldSet>((r >> (u * 8)) & 0xffU); }

WorldSet all_worlds(int k);
Rel full_rel(int k);
Rel identity_rel(int k);
Rel compose(Rel r, Rel s, int k);
Rel converse(Rel r, int k);
Rel closure_plus(Rel r, int k);
bool is_transitive(Rel r, int k);

struct KripkeModel {
  int k = 1;
  std::map<std::string, Rel> acts;
  std::map<std::string, WorldSet> props;

  Rel act(const std::string& a) const;
  WorldSet prop(const std::string& p) const;
};

// Text form:
//   atoms: props = p,q ; acts = a
//   worlds: 2
//   a: (0,1) (1,1)
//   p: 0 1
// Every declared atom gets exactly one line; empty extensions have nothing
// after the colon.
KripkeModel parse_model(std::string_view text, Signature& sig);
std::string format_model(const KripkeModel& m, const Signature& sig);

KripkeModel random_model(std::mt19937_64& rng, int k, const Signature& sig, double density = 0.35);

struct Extension {
  enum class Kind { Worlds, Rel, Uninterpretable };
  Kind kind = Kind::Uninterpretable;
  std::uint64_t bits = 0;
  Path where;  // blocking node when uninterpretable

  static Extension worlds(WorldSet w) { return {Kind::Worlds, w, {}}; }
  static Extension rel(Rel r) { return {Kind::Rel, r, {}}; }
  bool ok() const { return kind != Kind::Uninterpretable; }
  bool operator==(const Extension& o) const { return kind == o.kind && bits == o.bits; }
};

// Extension of a ground operational term.  Throws Errc::InvalidArg on
// metavariables or structural nodes.
Extension interpret(const KripkeModel& m, const Term& t);
Extension interpret_structure(const KripkeModel& m, const Term& st, Pos pos);

enum class Truth { False, True, Uninterpretable };
Truth holds(const KripkeModel& m, const Sequent& s);

std::string format_extension(const Extension& e, int k);

}  // namespace pdlmt
