#include "doctest.h"

#include <functional>

#include "fvkit/errors.hpp"
#include "fvkit/formula.hpp"
#include "helpers.hpp"

using namespace fvkit;
using testutil::P;

namespace {
const Vocabulary kEU{{"E", 2}, {"U", 1}};
}

TEST_CASE("parse atoms, flattening and quantifier blocks") {
  Formula a = P("(E x y)", kEU);
  CHECK(a.is_literal());
  CHECK(a.positive());
  CHECK(a.relation() == "E");
  CHECK(a.args() == std::vector<std::string>{"x", "y"});

  CHECK(P("(and (E x y))", kEU) == a);
  CHECK(P("(or (E x y))", kEU) == a);

  Formula q = P("(exists (x y) (E x y))", kEU);
  REQUIRE(q.kind() == NodeKind::Exists);
  CHECK(q.var() == "x");
  REQUIRE(q.body().kind() == NodeKind::Exists);
  CHECK(q.body().var() == "y");
  CHECK(q.body().body() == a);
}

TEST_CASE("print canonical forms") {
  CHECK(print_formula(P("(E x y)", kEU)) == "(E x y)");
  CHECK(print_formula(Formula::bot()) == "false");
  CHECK(print_formula(Formula::exists("x", Formula::top())) == "(exists (x) true)");
  CHECK(print_formula(P("(not (= x y))", kEU)) == "(not (= x y))");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("(E x", kEU), ParseError);
  CHECK_THROWS_AS(P("(R x)", kEU), InputError);
  CHECK_THROWS_AS(P("(E x)", kEU), InputError);
  CHECK_THROWS_AS(P("(not (and (E x y)))", kEU), InputError);
  CHECK_THROWS_AS(P("(= x y z)", kEU), InputError);
  CHECK_THROWS_AS(P("(and)", kEU), InputError);
  try {
    P("(E x y) junk", kEU);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("vocabulary validation") {
  CHECK_THROWS_AS(validate_vocabulary({{"true", 1}}), InputError);
  CHECK_THROWS_AS(validate_vocabulary({{"=", 2}}), InputError);
  CHECK_THROWS_AS(validate_vocabulary({{"R", 0}}), InputError);
  CHECK_NOTHROW(validate_vocabulary({{"<=", 2}, {"Q1", 1}}));
  CHECK(infer_vocabulary("(exists (x) (and (E x x) (P x)))") == Vocabulary{{"E", 2}, {"P", 1}});
}

TEST_CASE("negate_dual") {
  CHECK(print_formula(negate_dual(P("(E x y)", kEU))) == "(not (E x y))");
  CHECK(negate_dual(P("(exists (x) (and (U x)))", kEU)) ==
        P("(forall (x) (or (not (U x))))", kEU));
  CHECK(negate_dual(Formula::top()) == Formula::bot());
}

TEST_CASE("classification examples") {
  auto c = classify(P("(or (U x) (not (U y)))", kEU));
  CHECK(c.sigma_level == 0);
  CHECK(c.pi_level == 0);
  CHECK(c.rank == 0);
  CHECK_FALSE(c.block_uniform_k.has_value());

  c = classify(P("(exists (x) (and (forall (y) (or (E x y)))))", kEU));
  CHECK(c.sigma_level == 2);
  CHECK(c.pi_level == 3);
  CHECK(c.rank == 2);
  REQUIRE(c.block_uniform_k.has_value());
  CHECK(*c.block_uniform_k == 1);

  c = classify(P("(forall (x) (or (U x)))", kEU));
  CHECK(c.pi_level == 1);
  CHECK(c.sigma_level == 2);
}

TEST_CASE("grammar levels of connectives over quantified children") {
  // A disjunction of existential formulas sits one level up.
  auto c = classify(P("(or (exists (x) (U x)) (exists (y) (not (U y))))", kEU));
  CHECK(c.sigma_level == 3);
  CHECK(c.pi_level == 2);
  c = classify(P("(and (exists (x) (U x)) (exists (y) (U y)))", kEU));
  CHECK(c.sigma_level == 3);
}

TEST_CASE("block uniformity") {
  CHECK(block_uniform_k(P("(exists (x y) (forall (z w) (E x z)))", kEU)) == 2);
  CHECK_FALSE(block_uniform_k(P("(exists (x y) (forall (z) (E x z)))", kEU)).has_value());
  CHECK(block_uniform_k(P("(and (exists (x) (U x)) (U y))", kEU)) == 1);
  CHECK(block_uniform_k(P("(exists (x) (and (exists (y) (E x y))))", kEU)) == 2);
}

TEST_CASE("free variables in first-occurrence order") {
  CHECK(free_variables(P("(E x y)", kEU)) == std::vector<std::string>{"x", "y"});
  CHECK(free_variables(P("(exists (x) (E x y))", kEU)) == std::vector<std::string>{"y"});
  CHECK(free_variables(Formula::top()).empty());
}

TEST_CASE("alpha normalization") {
  Formula f = P("(and (exists (x) (U x)) (exists (x) (U x)))", kEU);
  CHECK(is_alpha_normalized(f));
  CHECK(f.children()[0].var() != f.children()[1].var());

  Formula g = P("(and (U x) (exists (x) (U x)))", kEU);
  CHECK(is_alpha_normalized(g));
  CHECK(g.children()[1].var() != "x");
  CHECK(free_variables(g) == std::vector<std::string>{"x"});

  Formula raw = Formula::conj({Formula::literal(true, "U", {"x"}),
                               Formula::exists("x", Formula::literal(true, "U", {"x"}))});
  CHECK_FALSE(is_alpha_normalized(raw));
  CHECK(alpha_normalize(raw) == g);
}

TEST_CASE("random_formula contract") {
  Formula f = random_formula(Mode::Sigma, 0, 0, {{"E", 2}}, {"x"}, 2, 7);
  CHECK(f.quantifier_free());
  for (const auto& v : free_variables(f)) CHECK(v == "x");

  CHECK(random_formula(Mode::Sigma, 2, 3, kEU, {"x"}, 3, 99) ==
        random_formula(Mode::Sigma, 2, 3, kEU, {"x"}, 3, 99));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Formula s = random_formula(Mode::Sigma, 2, 3, {{"E", 2}}, {}, 3, seed);
    auto c = classify(s);
    CHECK(c.sigma_level <= 2);
    CHECK(c.rank <= 3);
    CHECK(free_variables(s).empty());
    Formula p = random_formula(Mode::Pi, 2, 3, {{"E", 2}}, {}, 3, seed);
    CHECK(classify(p).pi_level <= 2);
  }
  CHECK_THROWS_AS(random_formula(Mode::Sigma, 1, 1, {}, {}, 2, 1), InputError);
}

TEST_CASE("fanout bound of generated formulas") {
  std::function<int(const Formula&)> widest = [&](const Formula& g) {
    int w = g.is_connective() ? static_cast<int>(g.children().size()) : 0;
    for (const auto& c : g.children()) w = std::max(w, widest(c));
    return w;
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    CHECK(widest(random_formula(Mode::Pi, 2, 3, kEU, {"x", "y"}, 2, seed)) <= 2);
}

TEST_CASE("round trip, duality and minimality on generated formulas") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Mode mode = seed % 2 ? Mode::Pi : Mode::Sigma;
    Formula f = random_formula(mode, static_cast<int>(seed % 4), static_cast<int>(seed % 5), kEU,
                               {"x", "y"}, 3, seed);
    CHECK(parse_formula(print_formula(f), kEU) == f);
    Formula g = negate_dual(f);
    auto cf = classify(f), cg = classify(g);
    CHECK(cg.sigma_level == cf.pi_level);
    CHECK(cg.pi_level == cf.sigma_level);
    CHECK(cg.rank == cf.rank);
    CHECK(negate_dual(g) == f);
    CHECK(std::abs(cf.sigma_level - cf.pi_level) <= 1);
    CHECK((cf.rank == 0) == (cf.sigma_level == 0 && cf.pi_level == 0));
    if (cf.sigma_level >= 1) CHECK_FALSE(in_sigma(f, cf.sigma_level - 1));
    if (cf.pi_level >= 1) CHECK_FALSE(in_pi(f, cf.pi_level - 1));
    CHECK(in_sigma(f, cf.sigma_level + 1));
    CHECK(in_pi(f, cf.pi_level + 2));
  }
}

TEST_CASE("size counts nodes with literal arity") {
  CHECK(P("(E x y)", kEU).size() == 3);
  CHECK(Formula::top().size() == 1);
  CHECK(P("(exists (x) (U x))", kEU).size() == 3);
  CHECK(P("(and (U x) (not (U y)))", kEU).size() == 5);
}

TEST_CASE("fold_constants keeps quantifiers and rank") {
  Formula f = P("(and true (exists (x) (or false (U x))) true)", kEU);
  Formula g = fold_constants(f);
  CHECK(print_formula(g) == "(exists (x) (U x))");
  CHECK(quantifier_rank(fold_constants(P("(exists (x) true)", kEU))) == 1);
}
