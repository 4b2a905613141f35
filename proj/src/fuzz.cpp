#include "fuzz.hpp"

#include <map>
#include <sstream>

namespace pdlmt {

namespace {

const Signature& pool() {
  static const Signature sig = [] {
    Signature s;
    s.props = {"p", "q"};
    s.acts = {"a", "b"};
    return s;
  }();
  return sig;
}

std::vector<Op> ops_of(Sort s, Level level) {
  std::vector<Op> out;
  for (std::size_t i = 0; i < op_count(); ++i) {
    const OpInfo& oi = info(static_cast<Op>(i));
    if (oi.level == level && oi.result == s) out.push_back(oi.op);
  }
  return out;
}

const std::vector<Op>& candidates(Sort s) {
  static const std::vector<Op> table[6] = {
      ops_of(Sort::Fm, Level::Oper),  ops_of(Sort::Act, Level::Oper),    ops_of(Sort::TAct, Level::Oper),
      ops_of(Sort::FM, Level::Struct), ops_of(Sort::ACT, Level::Struct), ops_of(Sort::TACT, Level::Struct)};
  return table[static_cast<int>(s)];
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Term atom(std::mt19937_64& rng, Sort s) {
  static const std::vector<std::string> props{"p", "q"}, acts{"a", "b"};
  return s == Sort::Fm ? mk_atom(Sort::Fm, pick(rng, props)) : mk_atom(Sort::Act, pick(rng, acts));
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Position of each metavariable across the schema's sequents.  Metavariables
// occurring on both sides are left out.
std::map<std::string, Pos> meta_positions(const Schema& r) {
  std::map<std::string, std::optional<Pos>> seen;
  auto scan = [&](const Sequent& q) {
    for (const auto& e : substructures(q)) {
      if (!is_meta(e.term)) continue;
      auto [it, fresh] = seen.emplace(e.term->name, e.pos);
      if (!fresh && it->second != e.pos) it->second.reset();
    }
  };
  for (const auto& p : r.premises) scan(p);
  scan(r.conclusion);
  std::map<std::string, Pos> out;
  for (const auto& [name, pos] : seen)
    if (pos) out.emplace(name, *pos);
  return out;
}

}  // namespace

Term random_term(std::mt19937_64& rng, Sort s, int depth, bool atom_only, std::optional<Pos> pos) {
  if (atom_only) return atom(rng, s);
  if (is_structural(s)) {
    auto readable = [&](Op op) {
      if (!pos) return true;
      return (*pos == Pos::Ant ? info(op).ant_reading : info(op).suc_reading) != Op::None;
    };
    std::vector<Op> consts, ops;
    for (Op op : candidates(s)) {
      if (!readable(op)) continue;
      (info(op).arity == 0 ? consts : ops).push_back(op);
    }
    if (depth <= 0 || ops.empty() || coin(rng, 0.4)) {
      if (!consts.empty() && coin(rng, 0.15)) return mk(pick(rng, consts));
      return random_term(rng, lower(s), depth <= 0 ? 0 : depth - 1);
    }
    const OpInfo& oi = info(pick(rng, ops));
    std::vector<Term> kids;
    for (int i = 0; i < oi.arity; ++i) {
      std::optional<Pos> child = pos;
      if (pos && oi.flip[i]) child = flip(*pos);
      kids.push_back(random_term(rng, oi.arg[i], depth - 1, false, child));
    }
    return mk(oi.op, std::move(kids));
  }
  if (depth <= 0 || coin(rng, 0.35)) {
    switch (s) {
      case Sort::Fm: return coin(rng, 0.85) ? atom(rng, s) : mk(coin(rng, 0.5) ? Op::Top : Op::Bot);
      case Sort::Act: return atom(rng, s);
      default: return mk(Op::Plus, atom(rng, Sort::Act));
    }
  }
  const OpInfo& oi = info(pick(rng, candidates(s)));
  std::vector<Term> kids;
  for (int i = 0; i < oi.arity; ++i) kids.push_back(random_term(rng, oi.arg[i], depth - 1));
  return mk(oi.op, std::move(kids));
}

FuzzReport fuzz(const FuzzConfig& cfg) {
  std::vector<const Schema*> schemas;
  for (const auto& r : catalog()) {
    if (r.is_virtual) continue;
    if (!cfg.schema.empty() && r.id != cfg.schema) continue;
    schemas.push_back(&r);
  }
  if (!cfg.schema.empty() && schemas.empty()) {
    const Schema* r = find_schema(cfg.schema);
    if (!r && cfg.schema == abs4_mutant().id) r = &abs4_mutant();
    if (!r) throw Error(Errc::UnknownRule, "unknown rule '" + cfg.schema + "'");
    throw Error(Errc::Unsupported, cfg.schema + " mentions a virtual adjoint and has no semantics");
  }
  return fuzz(cfg, schemas);
}

FuzzReport fuzz(const FuzzConfig& cfg, const std::vector<const Schema*>& schemas) {
  if (cfg.max_worlds < 1 || cfg.max_worlds > kMaxWorlds)
    throw Error(Errc::InvalidArg, "model size must be between 1 and " + std::to_string(kMaxWorlds));
  if (schemas.empty()) throw Error(Errc::InvalidArg, "no schemas to fuzz");
  FuzzReport rep;
  for (int t = 0; t < cfg.trials; ++t) {
    std::mt19937_64 rng(splitmix(cfg.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(t)));
    const Schema& r = *pick(rng, schemas);
    Subst s;
    const auto where = meta_positions(r);
    for (const auto& [name, d] : r.metas) {
      auto it = where.find(name);
      std::optional<Pos> pos;
      if (it != where.end()) pos = it->second;
      // On both sides only an operational term is readable everywhere.
      Sort sort = it == where.end() && is_structural(d.sort) ? lower(d.sort) : d.sort;
      s[name] = random_term(rng, sort, cfg.max_depth, d.atom_only, pos);
    }
    ++rep.trials;

    enum class Outcome { Vacuous, Checked, Skipped, Counter } outcome = Outcome::Vacuous;
    for (int attempt = 0; attempt < cfg.models_per_trial && outcome == Outcome::Vacuous; ++attempt) {
      int k = std::uniform_int_distribution<int>(1, cfg.max_worlds)(rng);
      double density = pick(rng, std::vector<double>{0.2, 0.35, 0.5});
      KripkeModel m = random_model(rng, k, pool(), density);
      auto prem = premises_of(r, s, r.is_omega() ? k * k : 0);
      bool all = true;
      for (const auto& p : prem) {
        Truth h = holds(m, p);
        if (h == Truth::Uninterpretable) {
          outcome = Outcome::Skipped;
          break;
        }
        if (h == Truth::False) all = false;
      }
      if (outcome == Outcome::Skipped || !all) continue;
      Sequent c = instantiate(r.conclusion, s);
      Truth h = holds(m, c);
      if (h == Truth::Uninterpretable) {
        outcome = Outcome::Skipped;
      } else if (h == Truth::True) {
        outcome = Outcome::Checked;
      } else {
        outcome = Outcome::Counter;
        Counterexample cx;
        cx.schema = r.id;
        for (const auto& [name, v] : s) cx.subst.emplace_back(name, render(v));
        cx.model = format_model(m, pool());
        for (const auto& p : prem) cx.premises.push_back(render(p));
        cx.conclusion = render(c);
        rep.counterexamples.push_back(std::move(cx));
      }
    }
    switch (outcome) {
      case Outcome::Vacuous: ++rep.vacuous; break;
      case Outcome::Checked: ++rep.checked; break;
      case Outcome::Skipped: ++rep.skipped; break;
      case Outcome::Counter: break;
    }
  }
  return rep;
}

const Schema& abs4_mutant() {
  static const Schema m = [] {
    Schema r = schema("abs4");
    r.id = "abs4_mutant";
    std::swap(r.premises[0].ant, r.premises[0].suc);
    return r;
  }();
  return m;
}

std::string format_report(const FuzzReport& r) {
  std::ostringstream out;
  out << r.trials << " trials, " << r.checked << " checked, " << r.vacuous << " vacuous, " << r.skipped
      << " skipped (uninterpretable)\n";
  for (const auto& cx : r.counterexamples) {
    out << "counterexample for " << cx.schema << "\n  substitution:";
    for (const auto& [k, v] : cx.subst) out << " $" << k << " := " << v << ";";
    out << "\n";
    for (const auto& p : cx.premises) out << "  premise    " << p << "\n";
    out << "  conclusion " << cx.conclusion << "\n  model:\n";
    std::istringstream lines(cx.model);
    for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
  }
  out << r.counterexamples.size() << " counterexamples\n";
  return out.str();
}

}  // namespace pdlmt
