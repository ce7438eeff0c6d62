#include "doctest.h"

#include <algorithm>

#include "fvkit/decompose.hpp"
#include "fvkit/errors.hpp"
#include "fvkit/interp.hpp"
#include "fvkit/modelcheck.hpp"
#include "helpers.hpp"

using namespace fvkit;
using testutil::P;

namespace {

const Vocabulary kE{{"E", 2}};
const Vocabulary kEP{{"E", 2}, {"P", 1}};

Prop X(std::size_t i, int s) { return Prop::var(i, s); }

// Direct check: union model versus reduction model for every assignment.
void check_fv(const Formula& f, const VarPartition& part, const ReductionSequence& d,
              const std::vector<Structure>& grid) {
  for (const auto& a : grid)
    for (const auto& b : grid) {
      Structure u = annotated_disjoint_union(a, b);
      auto t1s = all_index_tuples(a.size(), static_cast<int>(part.left.size()));
      auto t2s = all_index_tuples(b.size(), static_cast<int>(part.right.size()));
      for (const auto& i1 : t1s)
        for (const auto& i2 : t2s) {
          Tuple t1, t2;
          Assignment asg;
          for (std::size_t k = 0; k < i1.size(); ++k) {
            t1.push_back(a.universe()[i1[k]]);
            asg[part.left[k]] = "L:" + t1.back();
          }
          for (std::size_t k = 0; k < i2.size(); ++k) {
            t2.push_back(b.universe()[i2[k]]);
            asg[part.right[k]] = "R:" + t2.back();
          }
          REQUIRE(eval(u, f, asg) == eval_reduction(d, a, b, t1, t2));
        }
    }
}

}  // namespace

TEST_CASE("decompose base cases") {
  auto d = decompose(P("(E x y)", kE), kE, {{"x", "y"}, {}});
  REQUIRE(d.delta1.size() == 1);
  CHECK(print_formula(d.delta1[0]) == "(E x y)");
  REQUIRE(d.delta2.size() == 1);
  CHECK(d.delta2[0] == Formula::top());
  CHECK(d.beta == Prop::conj({X(0, 1), X(0, 2)}));

  d = decompose(P("(E x y)", kE), kE, {{"x"}, {"y"}});
  CHECK(d.delta1.empty());
  CHECK(d.delta2.empty());
  CHECK(d.beta == Prop::bot());

  d = decompose(P("(not (E x y))", kE), kE, {{"x"}, {"y"}});
  CHECK(d.beta == Prop::top());

  d = decompose(P("(P x)", kEP), kEP, {{"x"}, {}});
  CHECK(d.beta == Prop::top());
  d = decompose(P("(P y)", kEP), kEP, {{}, {"y"}});
  CHECK(d.beta == Prop::bot());
}

TEST_CASE("decompose a sentence") {
  auto d = decompose(P("(exists (z) (E z z))", kE), kE, {});
  REQUIRE(d.delta1.size() == 2);
  REQUIRE(d.delta2.size() == 2);
  CHECK(print_formula(d.delta1[0]) == "(exists (z) (E z z))");
  CHECK(d.delta1[1] == Formula::top());
  CHECK(d.delta2[0] == Formula::top());
  CHECK(print_formula(d.delta2[1]) == "(exists (z) (E z z))");
  CHECK(d.beta == Prop::disj({Prop::conj({X(0, 1), X(0, 2)}), Prop::conj({X(1, 1), X(1, 2)})}));
  CHECK(is_pair_form(d.beta, Mode::Sigma));

  CHECK(eval_reduction(d, testutil::loop(), testutil::edgeless(), {}, {}));
  CHECK_FALSE(eval_reduction(d, testutil::edgeless(), testutil::edgeless(), {}, {}));
}

TEST_CASE("decompose input errors") {
  CHECK_THROWS_AS(decompose(P("(E x y)", kE), kE, {{"x"}, {}}), InputError);
  CHECK_THROWS_AS(decompose(P("(E x y)", kE), kE, {{"x", "y"}, {"x"}}), InputError);
  CHECK_THROWS_AS(decompose(P("(E x x)", kE), kE, {{"x", "x"}, {}}), InputError);
  CHECK_THROWS_AS(decompose(P("(P x)", kEP), kE, {{"x"}, {}}), InputError);
}

TEST_CASE("normalize_pairs") {
  ReductionSequence d;
  d.vocab = kE;
  d.delta1 = {P("(exists (a) (E a a))", kE), P("(forall (a) (E a a))", kE)};
  d.delta2 = {P("(exists (b) (not (E b b)))", kE), P("(forall (b) (exists (c) (E b c)))", kE)};
  d.beta = Prop::conj({Prop::disj({X(0, 1), X(0, 2)}), Prop::disj({X(1, 1), X(1, 2)})});
  auto n = normalize_pairs(d, Mode::Sigma);
  CHECK(is_pair_form(n.beta, Mode::Sigma));
  CHECK(n.beta.children().size() == 4);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& t : n.beta.children())
    pairs.insert({print_formula(n.delta1[t.children()[0].index()]),
                  print_formula(n.delta2[t.children()[1].index()])});
  const std::string psi1 = print_formula(d.delta1[0]), psi2 = print_formula(d.delta1[1]);
  const std::string chi1 = print_formula(d.delta2[0]), chi2 = print_formula(d.delta2[1]);
  CHECK(pairs.count({"(and " + psi1 + " " + psi2 + ")", "true"}) == 1);
  CHECK(pairs.count({psi1, chi2}) == 1);
  CHECK(pairs.count({psi2, chi1}) == 1);
  CHECK(pairs.count({"true", "(and " + chi1 + " " + chi2 + ")"}) == 1);

  auto grid = all_structures(kE, 2);
  for (const auto& a : grid)
    for (const auto& b : grid) CHECK(eval_reduction(n, a, b, {}, {}) == eval_reduction(d, a, b, {}, {}));

  CHECK(normalize_pairs(n, Mode::Sigma).beta == n.beta);
  CHECK(normalize_pairs(n, Mode::Sigma).delta1 == n.delta1);

  ReductionSequence top;
  top.vocab = kE;
  auto t = normalize_pairs(top, Mode::Sigma);
  CHECK(t.delta1 == std::vector<Formula>{Formula::top()});
  CHECK(t.delta2 == std::vector<Formula>{Formula::top()});
  CHECK(t.beta == Prop::disj({Prop::conj({X(0, 1), X(0, 2)})}));
}

TEST_CASE("decompose_over_op examples") {
  Formula f = P("(exists (z) (E z z))", kE);
  auto d = decompose_over_op(f, builtin("disjoint-union"), {});
  auto grid = all_structures(kE, 2);
  for (const auto& a : grid)
    for (const auto& b : grid) {
      bool loops = eval(a, f, {}) || eval(b, f, {});
      CHECK(eval_reduction(d, a, b, {}, {}) == loops);
    }

  auto t = decompose_over_op(Formula::top(), builtin("join"), {});
  for (const auto& a : grid)
    for (const auto& b : grid) CHECK(eval_reduction(t, a, b, {}, {}));

  const Vocabulary le{{"<=", 2}};
  Formula g = P("(forall (x) (forall (y) (<= x y)))", le);
  SumLikeOp os = builtin("ordered-sum");
  auto dg = decompose_over_op(g, os, {});
  for (const auto& a : all_structures(le, 2))
    for (const auto& b : all_structures(le, 2))
      CHECK(eval_reduction(dg, a, b, {}, {}) == eval(apply_sum_like(os, a, b), g, {}));
  Structure l1 = testutil::linear_order(1);
  CHECK_FALSE(eval_reduction(dg, l1, l1, {}, {}));
}

TEST_CASE("eval_reduction with constant beta and bad vocabulary") {
  ReductionSequence d;
  d.vocab = kE;
  CHECK(eval_reduction(d, testutil::loop(), testutil::triangle(), {}, {}));
  CHECK_THROWS_AS(eval_reduction(d, testutil::linear_order(2), testutil::loop(), {}, {}), InputError);
}

TEST_CASE("reduction stats") {
  ReductionSequence d;
  d.vocab = kE;
  d.beta = Prop::bot();
  CHECK(reduction_stats(d).total_size == 1);

  auto e = decompose(P("(E x y)", kE), kE, {{"x", "y"}, {}});
  auto s = reduction_stats(e);
  CHECK(s.factor_count_1 == 1);
  CHECK(s.factor_count_2 == 1);
  CHECK(s.total_size == 3 + 1 + 3);
  CHECK(s.beta_size == 3);
}

TEST_CASE("simplify_reduction") {
  ReductionSequence d;
  d.vocab = kE;
  d.delta1 = {P("(exists (a) (E a a))", kE)};
  d.delta2 = {Formula::top()};
  auto pair = Prop::conj({X(0, 1), X(0, 2)});
  d.beta = Prop::disj({pair, pair});
  auto s = simplify_reduction(d);
  CHECK(s.beta.kind() == PropKind::Or);
  CHECK(s.beta.children().size() == 1);

  d.beta = Prop::disj({});
  CHECK(simplify_reduction(d).beta == Prop::bot());

  d.delta1.push_back(Formula::bot());
  d.delta2.push_back(Formula::top());
  d.beta = Prop::disj({pair, Prop::conj({X(1, 1), X(1, 2)})});
  s = simplify_reduction(d);
  CHECK(s.beta.children().size() == 1);
}

TEST_CASE("structural checks") {
  ReductionSequence d;
  d.vocab = kE;
  d.delta1 = {Formula::top()};
  d.delta2 = {Formula::top()};
  d.beta = X(3, 1);
  CHECK_THROWS_AS(check_well_formed(d), InputError);
  d.beta = X(0, 1);
  d.partition = {{"x"}, {}};
  d.delta2 = {P("(E x x)", kE)};
  CHECK_THROWS_AS(check_well_formed(d), InputError);
}

TEST_CASE("FV correctness, discipline and memo equality on generated formulas") {
  auto grid = all_structures(kE, 2);
  const std::vector<VarPartition> parts{{}, {{"x"}, {}}, {{}, {"x"}}, {{"x"}, {"y"}}};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Mode mode = seed % 2 ? Mode::Pi : Mode::Sigma;
    const int n = static_cast<int>(seed / 2 % 3), m = static_cast<int>(seed / 6 % 4);
    const VarPartition& part = parts[seed % parts.size()];
    std::vector<std::string> free = part.left;
    free.insert(free.end(), part.right.begin(), part.right.end());
    Formula f = random_formula(mode, n, m, kEP, free, 3, seed);
    auto d = decompose(f, kEP, part);
    check_fv(f, part, d, grid);

    auto c = classify(f);
    for (const auto* delta : {&d.delta1, &d.delta2})
      for (const auto& g : *delta) {
        auto cg = classify(g);
        if (mode == Mode::Sigma) CHECK(cg.sigma_level <= c.sigma_level);
        else CHECK(cg.pi_level <= c.pi_level);
        CHECK(cg.rank <= c.rank);
      }
    for (const auto& g : d.delta1)
      for (const auto& v : free_variables(g))
        CHECK(std::find(part.left.begin(), part.left.end(), v) != part.left.end());
    for (const auto& g : d.delta2)
      for (const auto& v : free_variables(g))
        CHECK(std::find(part.right.begin(), part.right.end(), v) != part.right.end());
    if (!f.quantifier_free())
      CHECK((is_pair_form(d.beta, Mode::Sigma) || is_pair_form(d.beta, Mode::Pi)));

    DecomposeOptions nomemo;
    nomemo.memoize = false;
    auto d2 = decompose(f, kEP, part, nomemo);
    CHECK(d2.delta1 == d.delta1);
    CHECK(d2.delta2 == d.delta2);
    CHECK(d2.beta == d.beta);

    DecomposeOptions simp;
    simp.simplify = true;
    check_fv(f, part, decompose(f, kEP, part, simp), grid);
    check_fv(f, part, simplify_reduction(d), grid);

    auto s1 = reduction_stats(d), s2 = reduction_stats(decompose(f, kEP, part));
    CHECK(s1.total_size == s2.total_size);
  }
}

TEST_CASE("composition: agreement on factors gives agreement on the reduction") {
  auto grid = all_structures(kE, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Formula f = random_formula(Mode::Sigma, 2, 2, kEP, {}, 3, seed + 500);
    auto d = decompose(f, kEP, {});
    for (const auto& a : grid)
      for (const auto& a2 : grid) {
        if (factor_values(d.delta1, {}, a, {}) != factor_values(d.delta1, {}, a2, {})) continue;
        for (const auto& b : grid) CHECK(eval_reduction(d, a, b, {}, {}) == eval_reduction(d, a2, b, {}, {}));
      }
  }
}

TEST_CASE("prop printing and shifting") {
  Prop p = Prop::disj({Prop::conj({X(0, 1), X(2, 2)}), Prop::top()});
  CHECK(print_prop(p) == "(or (and X0_1 X2_2) T)");
  Prop q = shift_prop(p, 5, 1);
  CHECK(q.children()[0].children()[0] == X(5, 1));
  CHECK(q.children()[0].children()[1] == X(3, 2));
  CHECK(eval_prop(p, {false, false, false}, {false, false, false}));
  CHECK(eval_prop(p.children()[0], {true}, {false, false, true}));
  CHECK_FALSE(eval_prop(Prop::disj({}), {}, {}));
}
