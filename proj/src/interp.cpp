#include "fvkit/interp.hpp"

#include <algorithm>
#include <set>

#include "fvkit/errors.hpp"
#include "fvkit/modelcheck.hpp"

namespace fvkit {

namespace {

std::vector<std::string> y_vars(int arity) {
  std::vector<std::string> ys;
  for (int i = 1; i <= arity; ++i) ys.push_back("y" + std::to_string(i));
  return ys;
}

void check_free(const Formula& f, const std::vector<std::string>& allowed, const std::string& what) {
  if (!f.quantifier_free()) throw InputError(what + " must be quantifier-free");
  for (const auto& v : free_variables(f))
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
      throw InputError(what + " uses unexpected free variable '" + v + "'");
}

class Transformer {
 public:
  explicit Transformer(const Interpretation& xi) : xi_(xi) {}

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case NodeKind::Top:
      case NodeKind::Bot:
        return f;
      case NodeKind::Literal: {
        Formula core = f.relation() == "="
                           ? Formula::equality(true, f.args()[0], f.args()[1])
                           : instantiate_relation(xi_, f.relation(), f.args());
        std::vector<Formula> parts{f.positive() ? core : negate_dual(core)};
        for (const auto& z : f.args()) parts.push_back(instantiate_universe(xi_, z));
        return Formula::conj(std::move(parts));
      }
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<Formula> cs;
        for (const auto& c : f.children()) cs.push_back(run(c));
        return Formula::connective(f.kind(), std::move(cs));
      }
      case NodeKind::Exists:
      case NodeKind::Forall:
        return block(f);
    }
    return f;
  }

 private:
  // A maximal run of same-kind quantifiers is translated as one block whose
  // body is the matching connective.
  Formula block(const Formula& f) {
    const NodeKind q = f.kind();
    const bool ex = q == NodeKind::Exists;
    std::vector<std::string> vars;
    Formula body = f;
    while (body.kind() == q) {
      vars.push_back(body.var());
      body = body.body();
    }
    std::vector<Formula> parts;
    for (const auto& x : vars) {
      Formula u = instantiate_universe(xi_, x);
      parts.push_back(ex ? u : negate_dual(u));
    }
    const NodeKind conn = ex ? NodeKind::And : NodeKind::Or;
    if (body.kind() == conn) {
      for (const auto& c : body.children()) parts.push_back(run(c));
    } else {
      parts.push_back(run(body));
    }
    Formula out = Formula::connective(conn, std::move(parts));
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = Formula::quantifier(q, *it, out);
    return out;
  }

  const Interpretation& xi_;
};

}  // namespace

void validate_interpretation(const Interpretation& xi) {
  validate_vocabulary(xi.source_vocab);
  validate_vocabulary(xi.target_vocab);
  validate_formula(xi.universe_formula, xi.source_vocab);
  check_free(xi.universe_formula, {"x1"}, "universe formula");
  for (const auto& [name, arity] : xi.target_vocab) {
    auto it = xi.relation_formulas.find(name);
    if (it == xi.relation_formulas.end())
      throw InputError("interpretation lacks a formula for '" + name + "'");
    validate_formula(it->second, xi.source_vocab);
    check_free(it->second, y_vars(arity), "formula for '" + name + "'");
  }
  for (const auto& [name, f] : xi.relation_formulas)
    if (!xi.target_vocab.count(name))
      throw InputError("formula given for '" + name + "' outside the target vocabulary");
}

Formula instantiate_universe(const Interpretation& xi, const std::string& v) {
  return substitute(xi.universe_formula, {{"x1", v}});
}

Formula instantiate_relation(const Interpretation& xi, const std::string& rel,
                             const std::vector<std::string>& args) {
  auto it = xi.relation_formulas.find(rel);
  if (it == xi.relation_formulas.end())
    throw InputError("relation '" + rel + "' not in the target vocabulary");
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < args.size(); ++i) m["y" + std::to_string(i + 1)] = args[i];
  return substitute(it->second, m);
}

Structure apply_interpretation(const Interpretation& xi, const Structure& a) {
  if (a.vocab() != xi.source_vocab)
    throw InputError("structure vocabulary does not match the interpretation's source");
  CompiledFormula u(xi.universe_formula, a, {"x1"});
  std::vector<int> keep;
  std::vector<std::string> universe;
  for (int e = 0; e < a.size(); ++e)
    if (u.eval({e})) {
      keep.push_back(e);
      universe.push_back(a.universe()[e]);
    }
  if (universe.empty()) throw InputError("interpretation induces an empty universe");
  std::map<std::string, std::set<Tuple>> rels;
  for (const auto& [name, arity] : xi.target_vocab) {
    CompiledFormula r(xi.relation_formulas.at(name), a, y_vars(arity));
    auto& out = rels[name];
    for (const auto& t : all_index_tuples(static_cast<int>(keep.size()), arity)) {
      std::vector<int> vals;
      for (int i : t) vals.push_back(keep[i]);
      if (!r.eval(vals)) continue;
      Tuple tt;
      for (int v : vals) tt.push_back(a.universe()[v]);
      out.insert(std::move(tt));
    }
  }
  return Structure(xi.target_vocab, std::move(universe), rels);
}

Formula transform_formula(const Interpretation& xi, const Formula& f, bool simplify) {
  validate_formula(f, xi.target_vocab);
  Formula out = Transformer(xi).run(f);
  return simplify ? fold_constants(out) : out;
}

Structure apply_sum_like(const SumLikeOp& op, const Structure& a, const Structure& b) {
  return apply_interpretation(op.interp, annotated_disjoint_union(a, b));
}

Vocabulary nlc_vocabulary(int r) {
  Vocabulary v{{"E", 2}};
  for (int i = 1; i <= r; ++i) v["Q" + std::to_string(i)] = 1;
  return v;
}

std::vector<std::string> builtin_names() {
  return {"disjoint-union", "ordered-sum", "join", "nlc-sum"};
}

SumLikeOp builtin(const std::string& name, const BuiltinParams& params) {
  Vocabulary tau = params.vocab;
  if (name == "nlc-sum") {
    if (params.r < 1) throw InputError("nlc-sum needs r >= 1");
    tau = nlc_vocabulary(params.r);
  } else if (tau.empty()) {
    tau = name == "ordered-sum" ? Vocabulary{{params.order_relation, 2}} : Vocabulary{{"E", 2}};
  }
  validate_vocabulary(tau);
  if (tau.count(kMarker)) throw InputError("vocabulary must not contain the marker P");

  SumLikeOp op;
  op.name = name;
  op.interp.target_vocab = tau;
  op.interp.source_vocab = tau;
  op.interp.source_vocab[kMarker] = 1;
  op.interp.universe_formula = Formula::top();
  for (const auto& [rel, arity] : tau)
    op.interp.relation_formulas[rel] = Formula::literal(true, rel, y_vars(arity));

  auto p = [](bool pos, const char* v) { return Formula::literal(pos, kMarker, {v}); };
  if (name == "disjoint-union") {
  } else if (name == "ordered-sum") {
    const auto& le = params.order_relation;
    auto it = tau.find(le);
    if (it == tau.end() || it->second != 2)
      throw InputError("ordered-sum needs the binary order relation '" + le + "'");
    op.interp.relation_formulas[le] = Formula::disj(
        {Formula::literal(true, le, {"y1", "y2"}), Formula::conj({p(true, "y1"), p(false, "y2")})});
  } else if (name == "join") {
    auto it = tau.find("E");
    if (it == tau.end() || it->second != 2) throw InputError("join needs the binary relation E");
    op.interp.relation_formulas["E"] =
        Formula::disj({Formula::literal(true, "E", {"y1", "y2"}),
                       Formula::conj({p(true, "y1"), p(false, "y2")}),
                       Formula::conj({p(false, "y1"), p(true, "y2")})});
  } else if (name == "nlc-sum") {
    std::set<std::pair<int, int>> seen;
    std::vector<Formula> cases{Formula::literal(true, "E", {"y1", "y2"})};
    for (const auto& [i, j] : params.s) {
      if (i < 1 || i > params.r || j < 1 || j > params.r || !seen.insert({i, j}).second)
        throw InputError("malformed nlc-sum label set");
      cases.push_back(Formula::conj({p(true, "y1"),
                                     Formula::literal(true, "Q" + std::to_string(i), {"y1"}),
                                     p(false, "y2"),
                                     Formula::literal(true, "Q" + std::to_string(j), {"y2"})}));
    }
    op.interp.relation_formulas["E"] = Formula::disj(std::move(cases));
  } else {
    throw InputError("unknown operation '" + name + "'");
  }
  validate_interpretation(op.interp);
  return op;
}

}  // namespace fvkit
