#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "pdl.hpp"
#include "semantics.hpp"

using namespace pdlmt;

namespace {

// Naive reference semantics over adjacency matrices and world sets.
using Mat = std::vector<std::vector<bool>>;
using Set = std::set<int>;

Mat to_mat(Rel r, int k) {
  Mat m(k, std::vector<bool>(k, false));
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v) m[u][v] = (r >> (u * 8 + v)) & 1U;
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  int k = static_cast<int>(a.size());
  Mat c(k, std::vector<bool>(k, false));
  for (int u = 0; u < k; ++u)
    for (int w = 0; w < k; ++w)
      if (a[u][w])
        for (int v = 0; v < k; ++v)
          if (b[w][v]) c[u][v] = true;
  return c;
}

Mat add(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v) c[u][v] = a[u][v] || b[u][v];
  return c;
}

// R + R^2 + ... + R^k.
Mat plus_by_powers(const Mat& r) {
  Mat acc = r, pw = r;
  for (std::size_t i = 1; i < r.size(); ++i) {
    pw = mul(pw, r);
    acc = add(acc, pw);
  }
  return acc;
}

Mat ref_action(const KripkeModel& m, const pdl::P& a);

Set ref_formula(const KripkeModel& m, const pdl::P& f) {
  int k = m.k;
  Set all;
  for (int u = 0; u < k; ++u) all.insert(u);
  auto comp = [&](const Set& s) {
    Set out;
    for (int u : all)
      if (!s.count(u)) out.insert(u);
    return out;
  };
  auto modal = [&](const Mat& r, const Set& b, bool box) {
    Set out;
    for (int u = 0; u < k; ++u) {
      bool any = false, every = true;
      for (int v = 0; v < k; ++v)
        if (r[u][v]) {
          any = any || b.count(v);
          every = every && b.count(v);
        }
      if (box ? every : any) out.insert(u);
    }
    return out;
  };
  auto transpose = [&](const Mat& r) {
    Mat t = r;
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v) t[u][v] = r[v][u];
    return t;
  };
  const auto& c = f->kids;
  switch (f->kind) {
    case pdl::Kind::Prop: {
      Set out;
      for (int u = 0; u < k; ++u)
        if (m.prop(f->name) >> u & 1U) out.insert(u);
      return out;
    }
    case pdl::Kind::Top: return all;
    case pdl::Kind::Bot: return {};
    case pdl::Kind::Neg: return comp(ref_formula(m, c[0]));
    case pdl::Kind::And: {
      Set a = ref_formula(m, c[0]), b = ref_formula(m, c[1]), out;
      for (int u : a)
        if (b.count(u)) out.insert(u);
      return out;
    }
    case pdl::Kind::Or: {
      Set a = ref_formula(m, c[0]), b = ref_formula(m, c[1]);
      a.insert(b.begin(), b.end());
      return a;
    }
    case pdl::Kind::Imp: {
      Set a = comp(ref_formula(m, c[0])), b = ref_formula(m, c[1]);
      a.insert(b.begin(), b.end());
      return a;
    }
    case pdl::Kind::Dia: return modal(ref_action(m, c[0]), ref_formula(m, c[1]), false);
    case pdl::Kind::Box: return modal(ref_action(m, c[0]), ref_formula(m, c[1]), true);
    case pdl::Kind::BackDia: return modal(transpose(ref_action(m, c[0])), ref_formula(m, c[1]), false);
    case pdl::Kind::BackBox: return modal(transpose(ref_action(m, c[0])), ref_formula(m, c[1]), true);
    default: FAIL("action in formula position"); return {};
  }
}

Mat ref_action(const KripkeModel& m, const pdl::P& a) {
  int k = m.k;
  const auto& c = a->kids;
  switch (a->kind) {
    case pdl::Kind::Act: return to_mat(m.act(a->name), k);
    case pdl::Kind::Seq: return mul(ref_action(m, c[0]), ref_action(m, c[1]));
    case pdl::Kind::Choice: return add(ref_action(m, c[0]), ref_action(m, c[1]));
    case pdl::Kind::Test: {
      Set s = ref_formula(m, c[0]);
      Mat out(k, std::vector<bool>(k, false));
      for (int u : s) out[u][u] = true;
      return out;
    }
    case pdl::Kind::Plus: return plus_by_powers(ref_action(m, c[0]));
    default: FAIL("formula in action position"); return {};
  }
}

WorldSet bits(const Set& s) {
  WorldSet w = 0;
  for (int u : s) w |= WorldSet{1} << u;
  return w;
}

Rel random_rel(std::mt19937_64& rng, int k, double density) {
  std::bernoulli_distribution coin(density);
  Rel r = 0;
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v)
      if (coin(rng)) r |= pair_bit(u, v);
  return r;
}

Rel from_mat(const Mat& m) {
  Rel r = 0;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[u][v]) r |= pair_bit(static_cast<int>(u), static_cast<int>(v));
  return r;
}

}  // namespace

TEST_CASE("closure agrees with the union of powers on random relations") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    int k = 1 + i % 6;
    Rel r = random_rel(rng, k, 0.1 + 0.1 * (i % 5));
    CAPTURE(i);
    CHECK(closure_plus(r, k) == from_mat(plus_by_powers(to_mat(r, k))));
  }
}

TEST_CASE("closure is the least transitive superset, exhaustively up to four worlds") {
  for (int k = 1; k <= 4; ++k) {
    const int cells = k * k;
    std::vector<Rel> all, transitive;
    for (std::uint32_t code = 0; code < (1u << cells); ++code) {
      Rel r = 0;
      for (int c = 0; c < cells; ++c)
        if (code >> c & 1U) r |= pair_bit(c / k, c % k);
      all.push_back(r);
      if (is_transitive(r, k)) transitive.push_back(r);
    }
    long mismatches = 0;
    for (Rel r : all) {
      Rel plus = closure_plus(r, k);
      if ((plus & r) != r || !is_transitive(plus, k)) ++mismatches;
      for (Rel t : transitive) {
        bool below = (r & ~t) == 0;
        bool closure_below = (plus & ~t) == 0;
        if (below != closure_below) ++mismatches;
      }
    }
    CAPTURE(k);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("relation algebra on a fixed model") {
  Rel r = pair_bit(0, 1) | pair_bit(1, 2);
  CHECK(compose(r, r, 3) == pair_bit(0, 2));
  CHECK(converse(r, 3) == (pair_bit(1, 0) | pair_bit(2, 1)));
  CHECK(closure_plus(r, 3) == (r | pair_bit(0, 2)));
  CHECK(identity_rel(2) == (pair_bit(0, 0) | pair_bit(1, 1)));
  CHECK_FALSE(is_transitive(r, 3));
  CHECK(is_transitive(full_rel(3), 3));
}

TEST_CASE("pdl evaluation matches the reference semantics and the translation") {
  Signature sig = Signature::defaults();
  sig.props = {"p", "q"};
  sig.acts = {"a", "b"};
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    auto f = pdl::random_formula(rng, 1 + i % 4, sig);
    auto m = random_model(rng, 1 + i % 4, sig);
    CAPTURE(pdl::render(f));
    WorldSet direct = pdl::eval(m, f);
    CHECK(direct == bits(ref_formula(m, f)));
    Extension e = interpret(m, pdl::translate(f));
    REQUIRE(e.kind == Extension::Kind::Worlds);
    CHECK(e.bits == direct);
  }
}

TEST_CASE("pdl parse, render and erase round trip") {
  Signature sig = Signature::defaults();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto f = pdl::random_formula(rng, 1 + i % 4, sig);
    CAPTURE(pdl::render(f));
    CHECK(pdl::equal(pdl::parse(pdl::render(f), sig), f));
    auto back = pdl::erase(pdl::translate(f));
    REQUIRE(back);
    CHECK(pdl::equal(*back, f));
  }
  CHECK(render(pdl::translate(pdl::parse("<a>p", sig))) == "a wtri1 p");
  CHECK(render(pdl::translate(pdl::parse("[a+]p", sig))) == "(a+) fbox0 p");
  CHECK(render(pdl::translate(pdl::parse("[p?]q", sig))) == "(p?1) fbox1 q");
  CHECK_THROWS_AS(pdl::parse("<p>q", sig), Error);
  CHECK_THROWS_AS(pdl::parse("<a~>p", sig, {false}), Error);
}

TEST_CASE("model text round trip and errors") {
  Signature sig;
  auto m = parse_model("atoms: props = p ; acts = a\nworlds: 2\na: (0,1) (1,1)\np: 1\n", sig);
  CHECK(m.k == 2);
  CHECK(m.act("a") == (pair_bit(0, 1) | pair_bit(1, 1)));
  CHECK(m.prop("p") == 2u);
  Signature sig2;
  auto again = parse_model(format_model(m, sig), sig2);
  CHECK(again.act("a") == m.act("a"));
  CHECK(again.prop("p") == m.prop("p"));
  Signature bad;
  CHECK_THROWS_AS(parse_model("atoms: props = p ; acts = a\nworlds: 2\na: (0,5)\np:\n", bad), Error);
  CHECK_THROWS_AS(parse_model("atoms: props = p ; acts = a\nworlds: 2\na:\n", bad), Error);
}

TEST_CASE("sequent truth") {
  Signature sig;
  auto m = parse_model("atoms: props = p,q ; acts = a\nworlds: 2\na: (0,1)\np: 0 1\nq: 1\n", sig);
  ParseContext ctx{&sig, nullptr, false};
  auto S = [&](const char* t) { return parse_sequent(t, ctx); };
  CHECK(holds(m, S("p |- q")) == Truth::False);
  CHECK(holds(m, S("q |- p")) == Truth::True);
  CHECK(holds(m, S("a swtri1 q |- p")) == Truth::True);
  CHECK(holds(m, S("p |- a swbox1 q")) == Truth::True);
  CHECK(holds(m, S("a |- a")) == Truth::True);
}
