#include "doctest.h"

#include <algorithm>

#include "fvkit/errors.hpp"
#include "fvkit/interp.hpp"
#include "fvkit/json_io.hpp"
#include "fvkit/modelcheck.hpp"
#include "helpers.hpp"

using namespace fvkit;
using testutil::P;

namespace {

const Vocabulary kE{{"E", 2}};

Interpretation complement() { return interp_from_json(read_json_file(testutil::data_path("complement.json"))); }

bool same_up_to_iso(const Structure& a, const Structure& b) {
  if (a.size() != b.size() || a.vocab() != b.vocab()) return false;
  std::vector<int> perm(b.size());
  for (int i = 0; i < b.size(); ++i) perm[i] = i;
  std::vector<int> id = perm;
  do {
    if (is_partial_isomorphism(a, id, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("complement interpretation on the triangle") {
  Structure c = apply_interpretation(complement(), testutil::triangle());
  CHECK(c.size() == 3);
  CHECK(c.tuples("E") == std::set<Tuple>{{"0", "0"}, {"1", "1"}, {"2", "2"}});
}

TEST_CASE("identity interpretation") {
  Interpretation id;
  id.source_vocab = id.target_vocab = {{"E", 2}, {"U", 1}};
  id.universe_formula = Formula::top();
  id.relation_formulas["E"] = Formula::literal(true, "E", {"y1", "y2"});
  id.relation_formulas["U"] = Formula::literal(true, "U", {"y1"});
  Structure a = random_structure(id.source_vocab, 4, 5);
  CHECK(apply_interpretation(id, a) == a);
}

TEST_CASE("empty induced universe is rejected") {
  Interpretation xi;
  xi.source_vocab = xi.target_vocab = {{"U", 1}};
  xi.universe_formula = Formula::literal(true, "U", {"x1"});
  xi.relation_formulas["U"] = Formula::literal(true, "U", {"y1"});
  CHECK_THROWS_AS(apply_interpretation(xi, testutil::make({{"U", 1}}, {"a", "b"})), InputError);
}

TEST_CASE("interpretation validation") {
  Interpretation xi = complement();
  xi.relation_formulas["E"] = Formula::literal(true, "E", {"y1", "y3"});
  CHECK_THROWS_AS(validate_interpretation(xi), InputError);
  xi = complement();
  xi.relation_formulas.clear();
  CHECK_THROWS_AS(validate_interpretation(xi), InputError);
  xi = complement();
  xi.universe_formula = P("(exists (z) (E z z))", kE);
  CHECK_THROWS_AS(validate_interpretation(xi), InputError);
}

TEST_CASE("transform examples") {
  CHECK(transform_formula(complement(), Formula::top()) == Formula::top());
  Formula t = transform_formula(complement(), P("(exists (z) (and (E z z)))", kE));
  CHECK(print_formula(t) == "(exists (z) (and true (and (not (E z z)) true true)))");

  SumLikeOp os = builtin("ordered-sum");
  Formula u = transform_formula(os.interp, P("(<= x y)", {{"<=", 2}}));
  CHECK(print_formula(u) == "(and (or (<= x y) (and (P x) (not (P y)))) true true)");
  CHECK(print_formula(transform_formula(os.interp, P("(<= x y)", {{"<=", 2}}), true)) ==
        "(or (<= x y) (and (P x) (not (P y))))");
}

TEST_CASE("builtin definitions") {
  SumLikeOp os = builtin("ordered-sum");
  CHECK(print_formula(os.interp.relation_formulas.at("<=")) ==
        "(or (<= y1 y2) (and (P y1) (not (P y2))))");
  SumLikeOp nlc = builtin("nlc-sum", {{}, "<=", 2, {{1, 2}}});
  CHECK(print_formula(nlc.interp.relation_formulas.at("E")) ==
        "(or (E y1 y2) (and (P y1) (Q1 y1) (not (P y2)) (Q2 y2)))");
  CHECK(nlc.vocab() == Vocabulary{{"E", 2}, {"Q1", 1}, {"Q2", 1}});
  CHECK_THROWS_AS(builtin("nonsense"), InputError);
  CHECK_THROWS_AS(builtin("nlc-sum", {{}, "<=", 2, {{1, 3}}}), InputError);
  CHECK_THROWS_AS(builtin("join", {{{"U", 1}}, "<=", 0, {}}), InputError);
}

TEST_CASE("sum-like operations") {
  Structure du = apply_sum_like(builtin("disjoint-union"), testutil::loop(), testutil::edgeless());
  CHECK(du.size() == 2);
  CHECK(du.tuples("E").size() == 1);
  CHECK(du.vocab() == kE);

  Structure l5 = apply_sum_like(builtin("ordered-sum"), testutil::linear_order(2), testutil::linear_order(3));
  CHECK(same_up_to_iso(l5, testutil::linear_order(5)));

  SumLikeOp nlc = builtin("nlc-sum", {{}, "<=", 1, {{1, 1}}});
  Structure g = testutil::make(nlc.vocab(), {"a", "b"}, {{"Q1", {{"a"}, {"b"}}}});
  Structure h = apply_sum_like(nlc, g, g);
  CHECK(h.tuples("E").size() == 4);
  for (const auto& t : h.tuples("E")) CHECK(t[0].substr(0, 2) == "L:");

  Structure j = apply_sum_like(builtin("join"), testutil::edgeless(), testutil::edgeless());
  CHECK(j.tuples("E").size() == 2);
}

TEST_CASE("fundamental property on random interpretations and sentences") {
  const Vocabulary v{{"E", 2}, {"U", 1}};
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Interpretation xi;
    xi.source_vocab = xi.target_vocab = v;
    xi.universe_formula = random_formula(Mode::Sigma, 0, 0, v, {"x1"}, 2, seed);
    xi.relation_formulas["E"] = random_formula(Mode::Sigma, 0, 0, v, {"y1", "y2"}, 2, seed + 1000);
    xi.relation_formulas["U"] = random_formula(Mode::Sigma, 0, 0, v, {"y1"}, 2, seed + 2000);
    Structure a = random_structure(v, 1 + seed % 4, seed);
    Formula f = random_formula(seed % 2 ? Mode::Pi : Mode::Sigma, 2, 2, v, {}, 3, seed + 3000);
    bool in_image;
    try {
      in_image = eval(apply_interpretation(xi, a), f, {});
    } catch (const InputError&) {
      continue;
    }
    CHECK(in_image == eval(a, transform_formula(xi, f), {}));
    CHECK(in_image == eval(a, transform_formula(xi, f, true), {}));
    ++checked;
  }
  CHECK(checked > 50);
}
