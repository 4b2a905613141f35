#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "semantics.hpp"
#include "syntax.hpp"

namespace pdlmt::pdl {

enum class Kind {
  // formulas
  Prop, Top, Bot, Neg, And, Or, Imp, Dia, Box, BackDia, BackBox,
  // actions
  Act, Seq, Choice, Test, Plus,
};

struct PNode;
using P = std::shared_ptr<const PNode>;

struct PNode {
  Kind kind;
  std::string name;
  std::vector<P> kids;  // modalities: {action, formula}
};

bool is_action(Kind k);

P prop(std::string name);
P act(std::string name);
P top();
P bot();
P neg(P a);
P conj(P a, P b);
P disj(P a, P b);
P imp(P a, P b);  // imp(A, bot) normalizes to neg(A)
P dia(P alpha, P a);
P box(P alpha, P a);
P back_dia(P alpha, P a);
P back_box(P alpha, P a);
P seq(P a, P b);
P choice(P a, P b);
P test(P a);
P plus(P a);

bool equal(const P& a, const P& b);

// Grammar (tightest first): atoms, top, bot, ( ), postfix ? and + on actions;
// ~A, <α>A, [α]A, <α~>A, [α~]A; then ; before cup on actions and & | -> on
// formulas (-> right-associative).  back_modalities gates the ~ forms.
struct Options {
  bool back_modalities = true;
};
P parse(std::string_view text, const Signature& sig, Options opt = {});
std::string render(const P& n);

WorldSet eval(const KripkeModel& m, const P& a);
Rel eval_action(const KripkeModel& m, const P& alpha);

Term translate(const P& n);

// Left inverse of translate; nullopt for terms outside its image.
std::optional<P> erase(const Term& t);

P random_formula(std::mt19937_64& rng, int depth, const Signature& sig, bool back_modalities = true);

}  // namespace pdlmt::pdl
