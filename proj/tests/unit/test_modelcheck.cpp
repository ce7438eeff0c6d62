#include "doctest.h"

#include "fvkit/errors.hpp"
#include "fvkit/modelcheck.hpp"
#include "helpers.hpp"

using namespace fvkit;
using testutil::P;

namespace {
const Vocabulary kE{{"E", 2}};
const Vocabulary kEU{{"E", 2}, {"U", 1}};
}

TEST_CASE("loop and triangle") {
  Formula f = P("(exists (x) (E x x))", kE);
  CHECK_FALSE(eval(testutil::triangle(), f, {}));
  CHECK(eval(testutil::loop(), f, {}));
  CHECK(eval(testutil::triangle(), P("(forall (x) (exists (y) (E x y)))", kE), {}));
  CHECK(eval(testutil::triangle(), P("(E x y)", kE), {{"x", "0"}, {"y", "2"}}));
  CHECK_FALSE(eval(testutil::triangle(), P("(= x y)", kE), {{"x", "0"}, {"y", "2"}}));
}

TEST_CASE("assignment errors and the work cap") {
  CHECK_THROWS_AS(eval(testutil::loop(), P("(E x y)", kE), {{"x", "a"}}), InputError);
  CHECK_THROWS_AS(eval(testutil::loop(), P("(E x x)", kE), {{"x", "zz"}}), InputError);
  CHECK_THROWS_AS(eval(testutil::loop(), P("(exists (x) (U x))", kEU), {}), InputError);
  Formula deep = P("(forall (a b c d) (or (E a b) (E c d) (not (E a b))))", kE);
  Structure big = random_structure(kE, 12, 3);
  CHECK_THROWS_AS(eval(big, deep, {}, 1000), CapExceeded);
  CHECK(eval(big, deep, {}));
}

TEST_CASE("constants") {
  Structure s = testutil::triangle();
  CHECK(eval(s, Formula::top(), {}));
  CHECK_FALSE(eval(s, Formula::bot(), {}));
}

TEST_CASE("duality and isomorphism invariance on random inputs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Formula f = random_formula(seed % 2 ? Mode::Pi : Mode::Sigma, 2, 3, kEU, {"x"}, 3, seed);
    Structure a = random_structure(kEU, 1 + seed % 4, seed * 7 + 1);
    Assignment asg{{"x", a.universe()[seed % a.size()]}};
    bool v = eval(a, f, asg);
    CHECK(eval(a, negate_dual(f), asg) == !v);

    std::map<std::string, std::string> ren;
    for (std::size_t i = 0; i < a.universe().size(); ++i)
      ren[a.universe()[i]] = "e" + std::to_string(a.universe().size() - i);
    CHECK(eval(rename_elements(a, ren), f, {{"x", ren[asg["x"]]}}) == v);
  }
}

TEST_CASE("compiled evaluation agrees with the interpreter") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Formula f = random_formula(Mode::Sigma, 2, 2, kEU, {"x", "y"}, 3, seed);
    Structure a = random_structure(kEU, 3, seed);
    CompiledFormula cf(f, a, {"x", "y"});
    for (const auto& t : all_index_tuples(3, 2))
      CHECK(cf.eval(t) == eval(a, f, {{"x", a.universe()[t[0]]}, {"y", a.universe()[t[1]]}}));
  }
}
