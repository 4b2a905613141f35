#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "term.hpp"

namespace pdlmt {

// Declared atoms.  The two sets are disjoint; an identifier in neither is a
// parse error.
struct Signature {
  std::set<std::string> props;
  std::set<std::string> acts;

  static Signature from_header(std::string_view header);  // "atoms: props = p,q ; acts = a,b"
  static Signature defaults();                            // props p,q,r,s ; acts a,b,c,d
  std::string header() const;
  Sort classify(const std::string& name) const;  // Fm, Act or Bad
};

struct MetaDecl {
  Sort sort = Sort::Bad;
  bool atom_only = false;
};
using MetaDecls = std::map<std::string, MetaDecl>;

// Parses "a:Act B:Fm Z:FM p:Prop pi:ActAtom" into declarations.
MetaDecls parse_meta_decls(std::string_view text);

struct ParseContext {
  const Signature* sig = nullptr;
  const MetaDecls* metas = nullptr;
  bool infer = false;  // accept unindexed family tokens and fill the index from child sorts
};

Term parse_term(std::string_view text, const ParseContext& ctx);
Sequent parse_sequent(std::string_view text, const ParseContext& ctx);

// Splits an optional leading "atoms: ..." line off an input; returns the body.
std::string_view split_header(std::string_view text, Signature& sig);

enum class Format { Ascii, Latex };

std::string render(const Term& t, Format f = Format::Ascii);
std::string render(const Sequent& s, Format f = Format::Ascii);
std::string latex_preamble();

}  // namespace pdlmt
