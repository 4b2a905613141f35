/* pdlmt: multi-type display calculus for propositional dynamic logic.
 *
 * C interface.  Proofs and models are opaque handles released with their
 * _free function.  Every call returns a status; on failure the message is
 * available from pdlmt_last_error() until the next call on the same thread.
 * Strings returned through char** are allocated by the library and released
 * with pdlmt_string_free.
 *
 * Textual inputs (sequents, terms, scripts, models) may start with a line
 * "atoms: props = p,q ; acts = a,b" declaring their atoms; otherwise the
 * default signature (props p,q,r,s and acts a,b,c,d) applies.
 */
#ifndef PDLMT_H
#define PDLMT_H

#include <stdint.h>

#if defined(_WIN32)
#define PDLMT_API __declspec(dllexport)
#else
#define PDLMT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdlmt_status {
  PDLMT_OK = 0,
  PDLMT_E_PARSE = 1,
  PDLMT_E_SORT = 2,
  PDLMT_E_TYPE_MISMATCH = 3,
  PDLMT_E_UNKNOWN_RULE = 4,
  PDLMT_E_BAD_MATCH = 5,
  PDLMT_E_OMEGA = 6,
  PDLMT_E_DISPLAY = 7,
  PDLMT_E_INVALID_ARG = 8,
  PDLMT_E_IO = 9,
  PDLMT_E_UNSUPPORTED = 10,
  PDLMT_E_INTERNAL = 11,
  /* A proof failed to check or a fuzz run found counterexamples. */
  PDLMT_E_REJECTED = 12
} pdlmt_status;

typedef enum pdlmt_truth { PDLMT_FALSE = 0, PDLMT_TRUE = 1, PDLMT_UNINTERPRETABLE = 2 } pdlmt_truth;

typedef struct pdlmt_proof pdlmt_proof;
typedef struct pdlmt_model pdlmt_model;

PDLMT_API const char* pdlmt_version(void);
PDLMT_API const char* pdlmt_last_error(void);
PDLMT_API const char* pdlmt_status_name(pdlmt_status s);
PDLMT_API void pdlmt_string_free(char* s);

/* PDLMT_OMEGA_BOUND from the environment when set to a positive integer,
 * 6 otherwise. */
PDLMT_API int pdlmt_default_omega_bound(void);

/* Canonical rendering (ASCII, or LaTeX when latex != 0) of a sequent and
 * the structural sort of its sides. */
PDLMT_API pdlmt_status pdlmt_parse(const char* text, int latex, char** canonical, char** sort);
/* Translation of a PDL formula into an operational formula. */
PDLMT_API pdlmt_status pdlmt_translate(const char* pdl, char** out);

/* ---- proofs ---- */

PDLMT_API pdlmt_status pdlmt_proof_load(const char* script, pdlmt_proof** out);
/* Axiom derivations take n = 0; lemma families need n >= 1. */
PDLMT_API pdlmt_status pdlmt_proof_derive(const char* id, int n, pdlmt_proof** out);
PDLMT_API void pdlmt_proof_free(pdlmt_proof* p);

/* PDLMT_OK when the proof checks, PDLMT_E_REJECTED otherwise; report (may
 * be null) receives a one-line verdict.  omega_bound <= 0 selects the
 * default bound. */
PDLMT_API pdlmt_status pdlmt_proof_check(const pdlmt_proof* p, int omega_bound, char** report);
PDLMT_API pdlmt_status pdlmt_proof_conclusion(const pdlmt_proof* p, char** out);
PDLMT_API pdlmt_status pdlmt_proof_save(const pdlmt_proof* p, char** script);
/* latex != 0 renders a bussproofs tree, otherwise an indented ASCII tree. */
PDLMT_API pdlmt_status pdlmt_proof_render(const pdlmt_proof* p, int latex, char** out);
PDLMT_API pdlmt_status pdlmt_proof_count_rule(const pdlmt_proof* p, const char* prefix, int* count);
/* Principal cut reduction with the given fuel; out receives the new proof. */
PDLMT_API pdlmt_status pdlmt_proof_cutreduce(const pdlmt_proof* p, int fuel, pdlmt_proof** out, char** report);

/* ---- semantics ---- */

PDLMT_API pdlmt_status pdlmt_model_parse(const char* text, pdlmt_model** out);
PDLMT_API void pdlmt_model_free(pdlmt_model* m);
/* Truth of a sequent over the model's signature. */
PDLMT_API pdlmt_status pdlmt_model_eval(const pdlmt_model* m, const char* sequent, pdlmt_truth* truth);
/* Extension of a PDL formula, as a world set such as "{0 2}". */
PDLMT_API pdlmt_status pdlmt_model_eval_pdl(const pdlmt_model* m, const char* pdl, char** out);

/* Random soundness testing.  schema is a schema id, "abs4_mutant", or null
 * for all non-virtual schemas.  Returns PDLMT_E_REJECTED when counterexamples exist. */
PDLMT_API pdlmt_status pdlmt_fuzz(uint64_t seed, int trials, int max_worlds, const char* schema, char** report,
                                  int* counterexamples);

/* ---- display and rules ---- */

/* Display chain bringing the substructure at path ("0.1", first step picks
 * the side) to a whole side; one "rule: sequent" line per step. */
PDLMT_API pdlmt_status pdlmt_display(const char* sequent, const char* path, int budget, char** out);
PDLMT_API pdlmt_status pdlmt_rules_dump(char** out);
/* Schema conditions and derived-rule simulations; failures counts failing lines. */
PDLMT_API pdlmt_status pdlmt_audit(char** out, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* PDLMT_H */
