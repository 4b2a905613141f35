// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pdlmt/pdlmt.h"

namespace {

// Exit codes: 0 success, 1 rejected (failed check, counterexamples), 2 error.
constexpr int kRejected = 1;
constexpr int kError = 2;

struct Str {
  char* s = nullptr;
  ~Str() { pdlmt_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct ProofHandle {
  pdlmt_proof* p = nullptr;
  ~ProofHandle() { pdlmt_proof_free(p); }
};

int fail(pdlmt_status st) {
  std::cerr << "error (" << pdlmt_status_name(st) << "): " << pdlmt_last_error() << "\n";
  return st == PDLMT_E_REJECTED ? kRejected : kError;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error (i/o error): cannot read " << path << "\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error (i/o error): cannot write " << path << "\n";
    return false;
  }
  return true;
}

int load(const std::string& path, ProofHandle& h) {
  std::string text;
  if (!read_file(path, text)) return kError;
  pdlmt_status st = pdlmt_proof_load(text.c_str(), &h.p);
  return st == PDLMT_OK ? 0 : fail(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pdlmt: multi-type display calculus for PDL"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pdlmt_version());

  std::string text, file, path, id, out_file;
  int omega_bound = 0, n = 0, fuel = 100, trials = 1000, size = 4, budget = 64;
  std::uint64_t seed = 1;
  bool latex = false;
  std::string schema;

  auto* parse = app.add_subcommand("parse", "print the canonical form and sort of a sequent");
  parse->add_option("sequent", text, "sequent text")->required();
  parse->add_flag("--latex", latex, "print LaTeX instead of ASCII");

  auto* translate = app.add_subcommand("translate", "translate a PDL formula");
  translate->add_option("formula", text, "PDL formula, e.g. \"<a>p\"")->required();

  auto* check = app.add_subcommand("check", "check a proof script");
  check->add_option("script", file, "proof script (JSON lines)")->required();
  check->add_option("--omega-bound", omega_bound, "omega members to check (default $PDLMT_OMEGA_BOUND or 6)")
      ->check(CLI::PositiveNumber);

  auto* derive = app.add_subcommand("derive", "build a corpus derivation");
  derive->add_option("id", id, "axiom or lemma id")->required();
  derive->add_option("--n", n, "lemma index")->check(CLI::PositiveNumber);
  derive->add_option("--out", out_file, "write the script here instead of stdout");
  derive->add_flag("--latex", latex, "print a bussproofs tree instead of the script");

  auto* model_eval = app.add_subcommand("model-eval", "evaluate a sequent on a Kripke model");
  model_eval->add_option("model", file, "model file")->required();
  model_eval->add_option("sequent", text, "sequent text")->required();
  bool as_pdl = false;
  model_eval->add_flag("--pdl", as_pdl, "read the input as a PDL formula and print its extension");

  auto* fuzz = app.add_subcommand("fuzz", "random soundness testing of the rule schemas");
  fuzz->add_option("--seed", seed, "random seed");
  fuzz->add_option("--trials", trials, "number of trials")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--size", size, "maximum number of worlds")->check(CLI::Range(1, 8));
  fuzz->add_option("--schema", schema, "restrict to one schema (or abs4_mutant)");

  auto* display = app.add_subcommand("display", "display a substructure");
  display->add_option("sequent", text, "sequent text")->required();
  display->add_option("path", path, "path such as 0.1 (first step picks the side)")->required();
  display->add_option("--budget", budget, "search depth")->check(CLI::NonNegativeNumber);

  auto* cutreduce = app.add_subcommand("cutreduce", "reduce principal cuts in a proof script");
  cutreduce->add_option("script", file, "proof script")->required();
  cutreduce->add_option("--fuel", fuel, "maximum number of reduction steps")->check(CLI::NonNegativeNumber);
  cutreduce->add_option("--out", out_file, "write the reduced script here");

  auto* rules = app.add_subcommand("rules", "rule catalogue");
  rules->require_subcommand(1);
  rules->add_subcommand("dump", "print every schema");

  app.add_subcommand("audit", "check schema conditions and derived-rule simulations");

  CLI11_PARSE(app, argc, argv);

  pdlmt_status st;
  if (*parse) {
    Str canon, sort;
    if ((st = pdlmt_parse(text.c_str(), latex ? 1 : 0, &canon.s, &sort.s)) != PDLMT_OK) return fail(st);
    std::cout << canon.str() << "\nsort: " << sort.str() << "\n";
  } else if (*translate) {
    Str out;
    if ((st = pdlmt_translate(text.c_str(), &out.s)) != PDLMT_OK) return fail(st);
    std::cout << out.str() << "\n";
  } else if (*check) {
    ProofHandle h;
    if (int rc = load(file, h)) return rc;
    Str report;
    st = pdlmt_proof_check(h.p, omega_bound, &report.s);
    std::cout << report.str() << "\n";
    if (st == PDLMT_E_REJECTED) return kRejected;
    if (st != PDLMT_OK) return fail(st);
  } else if (*derive) {
    ProofHandle h;
    if ((st = pdlmt_proof_derive(id.c_str(), n, &h.p)) != PDLMT_OK) return fail(st);
    Str out;
    st = latex ? pdlmt_proof_render(h.p, 1, &out.s) : pdlmt_proof_save(h.p, &out.s);
    if (st != PDLMT_OK) return fail(st);
    if (out_file.empty())
      std::cout << out.str();
    else if (!write_file(out_file, out.str()))
      return kError;
  } else if (*model_eval) {
    std::string model_text;
    if (!read_file(file, model_text)) return kError;
    pdlmt_model* m = nullptr;
    if ((st = pdlmt_model_parse(model_text.c_str(), &m)) != PDLMT_OK) return fail(st);
    if (as_pdl) {
      Str out;
      st = pdlmt_model_eval_pdl(m, text.c_str(), &out.s);
      pdlmt_model_free(m);
      if (st != PDLMT_OK) return fail(st);
      std::cout << out.str() << "\n";
    } else {
      pdlmt_truth t;
      st = pdlmt_model_eval(m, text.c_str(), &t);
      pdlmt_model_free(m);
      if (st != PDLMT_OK) return fail(st);
      std::cout << (t == PDLMT_TRUE ? "true" : t == PDLMT_FALSE ? "false" : "uninterpretable") << "\n";
    }
  } else if (*fuzz) {
    Str report;
    int cx = 0;
    st = pdlmt_fuzz(seed, trials, size, schema.empty() ? nullptr : schema.c_str(), &report.s, &cx);
    if (st != PDLMT_OK && st != PDLMT_E_REJECTED) return fail(st);
    std::cout << report.str();
    if (cx > 0) return kRejected;
  } else if (*display) {
    Str out;
    if ((st = pdlmt_display(text.c_str(), path.c_str(), budget, &out.s)) != PDLMT_OK) return fail(st);
    std::cout << out.str();
  } else if (*cutreduce) {
    ProofHandle h, r;
    if (int rc = load(file, h)) return rc;
    Str report;
    if ((st = pdlmt_proof_cutreduce(h.p, fuel, &r.p, &report.s)) != PDLMT_OK) return fail(st);
    std::cout << report.str();
    Str check_line;
    st = pdlmt_proof_check(r.p, 0, &check_line.s);
    std::cout << check_line.str() << "\n";
    if (!out_file.empty()) {
      Str script;
      if (pdlmt_proof_save(r.p, &script.s) != PDLMT_OK || !write_file(out_file, script.str())) return kError;
    }
    if (st != PDLMT_OK) return kRejected;
  } else if (*rules) {
    Str out;
    if ((st = pdlmt_rules_dump(&out.s)) != PDLMT_OK) return fail(st);
    std::cout << out.str();
  } else {
    Str out;
    int failures = 0;
    if ((st = pdlmt_audit(&out.s, &failures)) != PDLMT_OK) return fail(st);
    std::cout << out.str();
    if (failures > 0) return kRejected;
  }
  return 0;
}
