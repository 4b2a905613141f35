#include "pdlmt/pdlmt.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "cutred.hpp"
#include "fuzz.hpp"
#include "kernel.hpp"
#include "pdl.hpp"
#include "simulate.hpp"

struct pdlmt_proof {
  pdlmt::ProofPtr p;
  pdlmt::Signature sig;
};

struct pdlmt_model {
  pdlmt::KripkeModel m;
  pdlmt::Signature sig;
};

namespace {

using namespace pdlmt;

thread_local std::string g_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

template <class F>
pdlmt_status guard(F&& f) {
  g_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    g_error = e.what();
    return static_cast<pdlmt_status>(e.code());
  } catch (const std::exception& e) {
    g_error = e.what();
    return PDLMT_E_INTERNAL;
  }
}

pdlmt_status invalid(const char* what) {
  g_error = what;
  return PDLMT_E_INVALID_ARG;
}

Sequent read_sequent(const char* text, Signature& sig) {
  sig = Signature::defaults();
  std::string_view body = split_header(text, sig);
  ParseContext ctx{&sig, nullptr, true};
  Sequent s = parse_sequent(body, ctx);
  check_sequent(s);
  return s;
}

std::string verdict_line(const Verdict& v, const Sequent& end) {
  if (v.ok) return "ok: " + render(end);
  return "rejected at " + path_string(v.path) + ": " + v.reason;
}

}  // namespace

extern "C" {

const char* pdlmt_version(void) { return "1.0.0"; }

const char* pdlmt_last_error(void) { return g_error.c_str(); }

const char* pdlmt_status_name(pdlmt_status s) {
  switch (s) {
    case PDLMT_OK: return "ok";
    case PDLMT_E_PARSE: return "parse error";
    case PDLMT_E_SORT: return "sort error";
    case PDLMT_E_TYPE_MISMATCH: return "type mismatch";
    case PDLMT_E_UNKNOWN_RULE: return "unknown rule";
    case PDLMT_E_BAD_MATCH: return "bad match";
    case PDLMT_E_OMEGA: return "omega error";
    case PDLMT_E_DISPLAY: return "display error";
    case PDLMT_E_INVALID_ARG: return "invalid argument";
    case PDLMT_E_IO: return "i/o error";
    case PDLMT_E_UNSUPPORTED: return "unsupported";
    case PDLMT_E_INTERNAL: return "internal error";
    case PDLMT_E_REJECTED: return "rejected";
  }
  return "unknown status";
}

void pdlmt_string_free(char* s) { std::free(s); }

int pdlmt_default_omega_bound(void) {
  const char* env = std::getenv("PDLMT_OMEGA_BOUND");
  if (!env || !*env) return 6;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000) return 6;
  return static_cast<int>(v);
}

pdlmt_status pdlmt_parse(const char* text, int latex, char** canonical, char** sort) {
  if (!text) return invalid("null text");
  return guard([&] {
    Signature sig;
    auto typed = check_sequent(read_sequent(text, sig));
    put(canonical, render(typed.seq, latex ? Format::Latex : Format::Ascii));
    put(sort, sort_name(typed.sort));
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_translate(const char* text, char** out) {
  if (!text || !out) return invalid("null argument");
  return guard([&] {
    Signature sig = Signature::defaults();
    std::string_view body = split_header(text, sig);
    *out = dup(render(pdl::translate(pdl::parse(body, sig))));
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_proof_load(const char* script, pdlmt_proof** out) {
  if (!script || !out) return invalid("null argument");
  return guard([&] {
    corpus::install_families();
    auto h = std::make_unique<pdlmt_proof>();
    h->p = load_script(script, &h->sig);
    *out = h.release();
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_proof_derive(const char* id, int n, pdlmt_proof** out) {
  if (!id || !out) return invalid("null argument");
  return guard([&] {
    auto h = std::make_unique<pdlmt_proof>();
    corpus::Params prm;
    h->sig = prm.signature();
    std::string name = id;
    const auto& lemmas = corpus::lemma_ids();
    if (std::find(lemmas.begin(), lemmas.end(), name) != lemmas.end()) {
      if (n < 1) throw Error(Errc::InvalidArg, name + " needs n >= 1");
      h->p = corpus::lemma(name, n, prm);
    } else {
      if (n != 0) throw Error(Errc::InvalidArg, name + " takes no n");
      h->p = corpus::derive(name, prm);
    }
    *out = h.release();
    return PDLMT_OK;
  });
}

void pdlmt_proof_free(pdlmt_proof* p) { delete p; }

pdlmt_status pdlmt_proof_check(const pdlmt_proof* p, int omega_bound, char** report) {
  if (!p) return invalid("null proof");
  return guard([&] {
    int bound = omega_bound > 0 ? omega_bound : pdlmt_default_omega_bound();
    Verdict v = check(p->p, bound);
    put(report, verdict_line(v, p->p->conclusion));
    if (!v.ok) g_error = v.reason;
    return v.ok ? PDLMT_OK : PDLMT_E_REJECTED;
  });
}

pdlmt_status pdlmt_proof_conclusion(const pdlmt_proof* p, char** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] {
    *out = dup(render(p->p->conclusion));
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_proof_save(const pdlmt_proof* p, char** script) {
  if (!p || !script) return invalid("null argument");
  return guard([&] {
    *script = dup(save_script(p->p, p->sig));
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_proof_render(const pdlmt_proof* p, int latex, char** out) {
  if (!p || !out) return invalid("null argument");
  return guard([&] {
    *out = dup(render_tree(p->p, latex ? Format::Latex : Format::Ascii));
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_proof_count_rule(const pdlmt_proof* p, const char* prefix, int* count) {
  if (!p || !prefix || !count) return invalid("null argument");
  return guard([&] {
    *count = count_rule(p->p, prefix);
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_proof_cutreduce(const pdlmt_proof* p, int fuel, pdlmt_proof** out, char** report) {
  if (!p || !out) return invalid("null argument");
  if (fuel < 0) return invalid("negative fuel");
  return guard([&] {
    CutReport rep;
    auto h = std::make_unique<pdlmt_proof>();
    h->sig = p->sig;
    h->p = reduce(p->p, fuel, &rep);
    put(report, format_report(rep));
    *out = h.release();
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_model_parse(const char* text, pdlmt_model** out) {
  if (!text || !out) return invalid("null argument");
  return guard([&] {
    auto h = std::make_unique<pdlmt_model>();
    h->m = parse_model(text, h->sig);
    *out = h.release();
    return PDLMT_OK;
  });
}

void pdlmt_model_free(pdlmt_model* m) { delete m; }

pdlmt_status pdlmt_model_eval(const pdlmt_model* m, const char* sequent, pdlmt_truth* truth) {
  if (!m || !sequent || !truth) return invalid("null argument");
  return guard([&] {
    ParseContext ctx{&m->sig, nullptr, true};
    Sequent s = parse_sequent(sequent, ctx);
    check_sequent(s);
    switch (holds(m->m, s)) {
      case Truth::False: *truth = PDLMT_FALSE; break;
      case Truth::True: *truth = PDLMT_TRUE; break;
      case Truth::Uninterpretable: *truth = PDLMT_UNINTERPRETABLE; break;
    }
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_model_eval_pdl(const pdlmt_model* m, const char* text, char** out) {
  if (!m || !text || !out) return invalid("null argument");
  return guard([&] {
    auto f = pdl::parse(text, m->sig);
    *out = dup(format_extension(Extension::worlds(pdl::eval(m->m, f)), m->m.k));
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_fuzz(uint64_t seed, int trials, int max_worlds, const char* schema, char** report,
                        int* counterexamples) {
  if (trials < 0) return invalid("negative trial count");
  return guard([&] {
    FuzzConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.max_worlds = max_worlds;
    FuzzReport rep;
    if (schema && std::string(schema) == abs4_mutant().id)
      rep = fuzz(cfg, {&abs4_mutant()});
    else {
      if (schema) cfg.schema = schema;
      rep = fuzz(cfg);
    }
    put(report, format_report(rep));
    if (counterexamples) *counterexamples = static_cast<int>(rep.counterexamples.size());
    return rep.counterexamples.empty() ? PDLMT_OK : PDLMT_E_REJECTED;
  });
}

pdlmt_status pdlmt_display(const char* sequent, const char* path, int budget, char** out) {
  if (!sequent || !path || !out) return invalid("null argument");
  if (budget < 0) return invalid("negative budget");
  return guard([&] {
    Signature sig;
    Sequent s = read_sequent(sequent, sig);
    Path where = parse_path(path);
    subterm_at(s, where);
    DisplayResult r = display(s, where, budget);
    if (!r.found)
      throw Error(Errc::Display, "no display of " + path_string(where) + " within budget " + std::to_string(budget) +
                                     " (" + std::to_string(r.explored) + " sequents explored)");
    std::ostringstream o;
    o << render(s) << "\n";
    for (const auto& st : r.chain) o << st.rule << ": " << render(st.result) << "\n";
    *out = dup(o.str());
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_rules_dump(char** out) {
  if (!out) return invalid("null argument");
  return guard([&] {
    std::ostringstream o;
    std::string group;
    for (const auto& r : catalog()) {
      if (r.group != group) {
        group = r.group;
        o << "# " << group << "\n";
      }
      o << render_schema(r);
      if (r.derived) o << "   [derived]";
      if (r.display) o << "   [display]";
      if (r.is_virtual) o << "   [virtual]";
      o << "\n";
    }
    *out = dup(o.str());
    return PDLMT_OK;
  });
}

pdlmt_status pdlmt_audit(char** out, int* failures) {
  if (!out) return invalid("null argument");
  return guard([&] {
    std::ostringstream o;
    int bad = 0, schemas = 0;
    for (const auto& r : catalog()) {
      ++schemas;
      auto rep = audit_schema(r);
      if (rep.all_pass()) continue;
      ++bad;
      o << "FAIL " << r.id << ":";
      for (const auto& [name, ok] : rep.checks)
        if (!ok) o << " " << name;
      for (const auto& n : rep.notes) o << " (" << n << ")";
      o << "\n";
    }
    o << schemas << " schemas audited, " << bad << " failing\n";
    int sims = 0, sim_bad = 0;
    for (const auto& s : simulate_derived(32)) {
      ++sims;
      if (s.ok) continue;
      ++sim_bad;
      o << "FAIL simulation " << s.id << ": " << s.reason << "\n";
    }
    o << sims << " derived rules simulated, " << sim_bad << " failing\n";
    if (failures) *failures = bad + sim_bad;
    *out = dup(o.str());
    return PDLMT_OK;
  });
}

}  // extern "C"
