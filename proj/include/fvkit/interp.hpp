#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fvkit/formula.hpp"
#include "fvkit/structure.hpp"

namespace fvkit {

// Quantifier-free scalar interpretation. The universe formula speaks about
// x1, the formula for a relation of arity r about y1..yr.
struct Interpretation {
  Vocabulary source_vocab;
  Vocabulary target_vocab;
  Formula universe_formula;
  std::map<std::string, Formula> relation_formulas;
};

void validate_interpretation(const Interpretation& xi);

// The universe formula applied to variable v, and a relation formula to args.
Formula instantiate_universe(const Interpretation& xi, const std::string& v);
Formula instantiate_relation(const Interpretation& xi, const std::string& rel,
                             const std::vector<std::string>& args);

Structure apply_interpretation(const Interpretation& xi, const Structure& a);
Formula transform_formula(const Interpretation& xi, const Formula& f, bool simplify = false);

// Binary operation A * B := xi(annotated union of A and B); xi is over tau + {P}.
struct SumLikeOp {
  std::string name;
  Interpretation interp;
  const Vocabulary& vocab() const { return interp.target_vocab; }
};

Structure apply_sum_like(const SumLikeOp& op, const Structure& a, const Structure& b);

struct BuiltinParams {
  Vocabulary vocab;               // empty: the operation's default vocabulary
  std::string order_relation = "<=";
  int r = 0;                      // nlc-sum label count
  std::vector<std::pair<int, int>> s;  // nlc-sum label pairs
};

// disjoint-union | ordered-sum | join | nlc-sum
SumLikeOp builtin(const std::string& name, const BuiltinParams& params = {});
Vocabulary nlc_vocabulary(int r);
std::vector<std::string> builtin_names();

}  // namespace fvkit
