#include "syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace pdlmt {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Keyword tables built once from the connective table.
struct Keywords {
  std::unordered_map<std::string, Op> exact;              // indexed tokens
  std::unordered_map<std::string, std::vector<Op>> family;  // unindexed tokens (infer mode)
  std::vector<std::string> symbols;                       // symbolic tokens, longest first

  Keywords() {
    for (std::size_t i = 0; i < op_count(); ++i) {
      const OpInfo& oi = info(static_cast<Op>(i));
      if (oi.fix == Fixity::Leaf) continue;
      exact.emplace(oi.ascii, oi.op);
      if (oi.index >= 0 && std::string(oi.family) != oi.ascii) family[oi.family].push_back(oi.op);
    }
    std::set<std::string> sym;
    for (const auto& [tok, op] : exact)
      if (!ident_start(tok[0])) sym.insert(tok);
    for (const auto& [tok, ops] : family)
      if (!ident_start(tok[0])) sym.insert(tok);
    sym.insert("|-");
    symbols.assign(sym.begin(), sym.end());
    std::stable_sort(symbols.begin(), symbols.end(),
                     [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  }
};

const Keywords& keywords() {
  static const Keywords kw;
  return kw;
}

bool is_keyword(const std::string& s) {
  const auto& kw = keywords();
  return kw.exact.count(s) || kw.family.count(s);
}

enum class Tok { Ident, Meta, Sym, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  const auto& kw = keywords();
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(' || c == ')') {
      out.push_back({c == '(' ? Tok::LParen : Tok::RParen, std::string(1, c), i + 1});
      ++i;
      continue;
    }
    if (c == '$') {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      if (j == i + 1) throw Error(Errc::Parse, "parse error at column " + std::to_string(i + 1) + ": empty metavariable");
      out.push_back({Tok::Meta, std::string(s.substr(i + 1, j - i - 1)), i + 1});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i + 1});
      i = j;
      continue;
    }
    bool hit = false;
    for (const auto& sym : kw.symbols) {
      if (s.substr(i, sym.size()) == sym) {
        out.push_back({Tok::Sym, sym, i + 1});
        i += sym.size();
        hit = true;
        break;
      }
    }
    if (!hit)
      throw Error(Errc::Parse, "parse error at column " + std::to_string(i + 1) + ": unexpected character '" +
                                   std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx) : toks_(lex(text)), ctx_(ctx) {}

  Term term() { return expr(); }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

  bool at_turnstile() const { return peek().kind == Tok::Sym && peek().text == "|-"; }
  void take() { ++pos_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseContext& ctx_;

  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::Parse, "parse error at column " + std::to_string(peek().col) + ": " + msg);
  }

  // Returns the candidate connectives a token may denote with the given fixity.
  std::vector<Op> candidates(const Token& t, Fixity fix) const {
    std::vector<Op> out;
    if (t.kind != Tok::Ident && t.kind != Tok::Sym) return out;
    const auto& kw = keywords();
    auto it = kw.exact.find(t.text);
    if (it != kw.exact.end() && info(it->second).fix == fix) out.push_back(it->second);
    if (out.empty() && ctx_.infer) {
      auto f = kw.family.find(t.text);
      if (f != kw.family.end())
        for (Op op : f->second)
          if (info(op).fix == fix) out.push_back(op);
    }
    return out;
  }

  Term build(const std::vector<Op>& ops, std::vector<Term> kids, std::size_t col) const {
    if (ops.size() == 1) return mk(ops[0], std::move(kids));
    std::vector<Term> fits;
    for (Op op : ops) {
      Term t = mk(op, kids);
      if (t->sort != Sort::Bad) fits.push_back(t);
    }
    auto where = "parse error at column " + std::to_string(col) + ": ";
    if (fits.size() == 1) return fits[0];
    if (fits.empty()) throw Error(Errc::Sort, where + "no index fits the child sorts");
    throw Error(Errc::Parse, where + "index is ambiguous from child sorts");
  }

  Term expr() {
    Term lhs = postfix();
    const Token& t = peek();
    auto ops = candidates(t, Fixity::Infix);
    if (ops.empty()) return lhs;
    std::size_t col = t.col;
    take();
    Term rhs = expr();
    return build(ops, {lhs, rhs}, col);
  }

  Term postfix() {
    Term t = primary();
    for (;;) {
      auto ops = candidates(peek(), Fixity::Postfix);
      if (ops.empty()) return t;
      std::size_t col = peek().col;
      take();
      t = build(ops, {t}, col);
    }
  }

  Term primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        take();
        Term inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return inner;
      }
      case Tok::Meta: {
        take();
        if (!ctx_.metas) fail("metavariable $" + t.text + " not allowed here");
        auto it = ctx_.metas->find(t.text);
        if (it == ctx_.metas->end()) fail("undeclared metavariable $" + t.text);
        return mk_meta(t.text, it->second.sort, it->second.atom_only);
      }
      case Tok::Ident: {
        auto ops = candidates(t, Fixity::Const);
        if (!ops.empty()) {
          take();
          if (ops.size() > 1) fail("constant '" + t.text + "' needs an explicit index");
          return mk(ops[0]);
        }
        if (is_keyword(t.text)) fail("unexpected connective '" + t.text + "'");
        take();
        Sort s = ctx_.sig ? ctx_.sig->classify(t.text) : Sort::Bad;
        if (s == Sort::Bad) {
          pos_--;
          fail("identifier '" + t.text + "' is declared neither as a proposition nor as an action");
        }
        return mk_atom(s, t.text);
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }
};

bool needs_parens(const Term& t) {
  Fixity f = info(t->op).fix;
  return f == Fixity::Infix || f == Fixity::Postfix;
}

void render_into(const Term& t, Format f, std::string& out) {
  const OpInfo& oi = info(t->op);
  auto child = [&](const Term& k) {
    if (needs_parens(k)) {
      out += '(';
      render_into(k, f, out);
      out += ')';
    } else {
      render_into(k, f, out);
    }
  };
  auto latex_op = [&] {
    std::string s = oi.latex;
    if (oi.index >= 0) s += "_{" + std::to_string(oi.index) + "}";
    return s;
  };
  switch (oi.fix) {
    case Fixity::Leaf:
      if (t->op == Op::Meta) {
        if (f == Format::Ascii) out += "$" + t->name;
        else out += "\\mathit{" + t->name + "}";
      } else {
        out += t->name;
      }
      return;
    case Fixity::Const:
      out += f == Format::Ascii ? std::string(oi.ascii) : latex_op();
      return;
    case Fixity::Postfix:
      child(t->kids[0]);
      if (f == Format::Ascii) out += oi.ascii;
      else out += "{" + latex_op() + "}";
      return;
    case Fixity::Infix:
      child(t->kids[0]);
      out += ' ';
      out += f == Format::Ascii ? std::string(oi.ascii) : latex_op();
      out += ' ';
      child(t->kids[1]);
      return;
  }
}

struct MacroDef {
  const char* name;
  const char* body;
};

const MacroDef kMacros[] = {
    {"\\pdlTop", "\\top"},
    {"\\pdlBot", "\\bot"},
    {"\\pdlAnd", "\\wedge"},
    {"\\pdlOr", "\\vee"},
    {"\\pdlImp", "\\rightarrow"},
    {"\\pdlDImp", "\\succ\\!\\!-"},
    {"\\pdlLImp", "\\leftarrow"},
    {"\\pdlLDImp", "-\\!\\!\\prec"},
    {"\\pdlWtri", "\\mathbin{\\vartriangle}"},
    {"\\pdlBtri", "\\mathbin{\\blacktriangle}"},
    {"\\pdlFbox", "\\mathbin{-\\!\\!\\vartriangleright}"},
    {"\\pdlBbox", "\\mathbin{-\\!\\!\\blacktriangleright}"},
    {"\\pdlTest", "?"},
    {"\\pdlPlus", "^{+}"},
    {"\\pdlMinus", "^{-}"},
    {"\\pdlSeq", "\\mathbin{;}"},
    {"\\pdlCup", "\\cup"},
    {"\\pdlRTest", "?^{r}"},
    {"\\pdlZero", "0"},
    {"\\pdlOne", "1"},
    {"\\pdlOSucc", "\\mathbin{-\\!\\succ}"},
    {"\\pdlOPrec", "\\mathbin{\\prec\\!-}"},
    {"\\pdlOResR", "\\mathbin{\\curlyvee_r}"},
    {"\\pdlOResL", "\\mathbin{\\curlyvee_l}"},
    {"\\pdlOWLeft", "\\mathbin{\\vartriangleleft}"},
    {"\\pdlOBLeft", "\\mathbin{\\blacktriangleleft}"},
    {"\\pdlSI", "\\mathrm{I}"},
    {"\\pdlComma", "\\,,\\,"},
    {"\\pdlSGt", ">"},
    {"\\pdlSLt", "<"},
    {"\\pdlSRTest", "\\mathord{\\check{?}}"},
    {"\\pdlSWtri", "\\mathbin{\\hat{\\vartriangle}}"},
    {"\\pdlSBtri", "\\mathbin{\\hat{\\blacktriangle}}"},
    {"\\pdlSWbox", "\\mathbin{\\hat{\\vartriangleright}}"},
    {"\\pdlSBbox", "\\mathbin{\\hat{\\blacktriangleright}}"},
    {"\\pdlGI", "\\mathbb{I}"},
    {"\\pdlPhi", "\\Phi"},
    {"\\pdlSMinus", "^{\\ominus}"},
    {"\\pdlSPlus", "^{\\oplus}"},
    {"\\pdlSTest", "\\hat{?}"},
    {"\\pdlSSeq", "\\mathbin{\\hat{;}}"},
    {"\\pdlSucc", "\\mathbin{\\succ}"},
    {"\\pdlPrec", "\\mathbin{\\prec}"},
    {"\\pdlBtw", "\\mathbin{\\between}"},
    {"\\pdlResR", "\\mathbin{\\hat{\\curlyvee}_r}"},
    {"\\pdlResL", "\\mathbin{\\hat{\\curlyvee}_l}"},
    {"\\pdlSWLeft", "\\mathbin{\\hat{\\vartriangleleft}}"},
    {"\\pdlSBLeft", "\\mathbin{\\hat{\\blacktriangleleft}}"},
    {"\\pdlVPrec", "\\mathbin{\\tilde{\\prec}}"},
    {"\\pdlVSucc", "\\mathbin{\\tilde{\\succ}}"},
    {"\\pdlVWLeft", "\\mathbin{\\tilde{\\vartriangleleft}}"},
    {"\\pdlVBLeft", "\\mathbin{\\tilde{\\blacktriangleleft}}"},
};

}  // namespace

Signature Signature::from_header(std::string_view header) {
  std::string h = trim(header);
  if (h.rfind("atoms:", 0) != 0) throw Error(Errc::Parse, "atom header must start with 'atoms:'");
  Signature sig;
  for (const auto& part : split(std::string_view(h).substr(6), ';')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error(Errc::Parse, "atom header: expected 'props = ...' or 'acts = ...'");
    std::string key = trim(std::string_view(part).substr(0, eq));
    std::set<std::string>* dst = key == "props" ? &sig.props : key == "acts" ? &sig.acts : nullptr;
    if (!dst) throw Error(Errc::Parse, "atom header: unknown key '" + key + "'");
    for (const auto& name : split(std::string_view(part).substr(eq + 1), ',')) {
      if (name.empty()) continue;
      bool ok = ident_start(name[0]) && std::all_of(name.begin(), name.end(), ident_char);
      if (!ok || is_keyword(name)) throw Error(Errc::Parse, "atom header: '" + name + "' is not a usable atom name");
      dst->insert(name);
    }
  }
  for (const auto& p : sig.props)
    if (sig.acts.count(p)) throw Error(Errc::Parse, "atom header: '" + p + "' declared as both proposition and action");
  return sig;
}

Signature Signature::defaults() { return from_header("atoms: props = p,q,r,s ; acts = a,b,c,d"); }

std::string Signature::header() const {
  auto join = [](const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
    return out;
  };
  return "atoms: props = " + join(props) + " ; acts = " + join(acts);
}

Sort Signature::classify(const std::string& name) const {
  if (props.count(name)) return Sort::Fm;
  if (acts.count(name)) return Sort::Act;
  return Sort::Bad;
}

MetaDecls parse_meta_decls(std::string_view text) {
  MetaDecls out;
  std::istringstream in{std::string(text)};
  std::string item;
  while (in >> item) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::Parse, "metavariable declaration '" + item + "' lacks a sort");
    std::string name = item.substr(0, colon), s = item.substr(colon + 1);
    MetaDecl d;
    if (s == "Prop") d = {Sort::Fm, true};
    else if (s == "ActAtom") d = {Sort::Act, true};
    else d = {sort_from_name(s), false};
    if (d.sort == Sort::Bad) throw Error(Errc::Parse, "unknown sort '" + s + "'");
    out[name] = d;
  }
  return out;
}

Term parse_term(std::string_view text, const ParseContext& ctx) {
  Parser p(text, ctx);
  Term t = p.term();
  p.expect_end();
  return t;
}

Sequent parse_sequent(std::string_view text, const ParseContext& ctx) {
  Parser p(text, ctx);
  Term a = p.term();
  if (!p.at_turnstile()) throw Error(Errc::Parse, "parse error: expected '|-' in sequent");
  p.take();
  Term b = p.term();
  p.expect_end();
  return {a, b};
}

std::string_view split_header(std::string_view text, Signature& sig) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.substr(i, 6) != "atoms:") return text;
  std::size_t nl = text.find('\n', i);
  std::string_view line = text.substr(i, nl == std::string_view::npos ? std::string_view::npos : nl - i);
  sig = Signature::from_header(line);
  return nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
}

std::string render(const Term& t, Format f) {
  std::string out;
  render_into(t, f, out);
  return out;
}

std::string render(const Sequent& s, Format f) {
  return render(s.ant, f) + (f == Format::Ascii ? " |- " : " \\vdash ") + render(s.suc, f);
}

std::string latex_preamble() {
  std::string out = "% connective macros; redefine any of them to retarget the symbols\n";
  for (const auto& m : kMacros) out += std::string("\\providecommand{") + m.name + "}{" + m.body + "}\n";
  return out;
}

}  // namespace pdlmt
