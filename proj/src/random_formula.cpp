#include <random>
#include <set>

#include "fvkit/errors.hpp"
#include "fvkit/formula.hpp"

namespace fvkit {

namespace {

class Generator {
 public:
  Generator(const Vocabulary& vocab, const std::vector<std::string>& free_vars, int max_fanout,
            std::uint64_t seed)
      : rng_(seed), max_fanout_(max_fanout) {
    for (const auto& [name, arity] : vocab) relations_.emplace_back(name, arity);
    taken_.insert(free_vars.begin(), free_vars.end());
  }

  Formula gen(Mode mode, int level, int budget, std::vector<std::string>& scope) {
    if (level == 0 || budget == 0) return qf(scope, 0);
    const int roll = pick(100);
    if (roll < 45) {
      std::string v = fresh();
      scope.push_back(v);
      Formula body = gen(mode, level, budget - 1, scope);
      scope.pop_back();
      return Formula::quantifier(mode == Mode::Sigma ? NodeKind::Exists : NodeKind::Forall, v,
                                 body);
    }
    if (roll < 85) {
      const int fan = 1 + pick(max_fanout_);
      const Mode dual = mode == Mode::Sigma ? Mode::Pi : Mode::Sigma;
      std::vector<Formula> cs;
      for (int i = 0; i < fan; ++i) cs.push_back(gen(dual, level - 1, budget, scope));
      return Formula::connective(mode == Mode::Sigma ? NodeKind::And : NodeKind::Or,
                                 std::move(cs));
    }
    return qf(scope, 0);
  }

 private:
  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  std::string fresh() {
    for (;;) {
      std::string v = "v" + std::to_string(++counter_);
      if (taken_.insert(v).second) return v;
    }
  }

  Formula qf(const std::vector<std::string>& scope, int depth) {
    if (scope.empty()) return pick(2) ? Formula::top() : Formula::bot();
    if (max_fanout_ >= 2 && depth < 2 && pick(100) < 25) {
      const int fan = 2 + pick(max_fanout_ - 1);
      std::vector<Formula> cs;
      for (int i = 0; i < fan; ++i) cs.push_back(qf(scope, depth + 1));
      return Formula::connective(pick(2) ? NodeKind::And : NodeKind::Or, std::move(cs));
    }
    return literal(scope);
  }

  Formula literal(const std::vector<std::string>& scope) {
    const bool positive = pick(2) == 0;
    const int choice = pick(static_cast<int>(relations_.size()) + 1);
    auto var = [&] { return scope[pick(static_cast<int>(scope.size()))]; };
    if (choice == static_cast<int>(relations_.size())) {
      std::string a = var();
      std::string b = var();
      return Formula::equality(positive, a, b);
    }
    const auto& [name, arity] = relations_[choice];
    std::vector<std::string> args;
    for (int i = 0; i < arity; ++i) args.push_back(var());
    return Formula::literal(positive, name, std::move(args));
  }

  std::mt19937_64 rng_;
  int max_fanout_;
  std::vector<std::pair<std::string, int>> relations_;
  std::set<std::string> taken_;
  int counter_ = 0;
};

}  // namespace

Formula random_formula(Mode mode, int n, int m, const Vocabulary& vocab,
                       const std::vector<std::string>& free_vars, int max_fanout,
                       std::uint64_t seed) {
  if (n < 0 || m < 0) throw InputError("level and rank must be non-negative");
  if (max_fanout < 1) throw InputError("max_fanout must be at least 1");
  if (vocab.empty() && m > 0)
    throw InputError("cannot generate quantified formulas over an empty vocabulary");
  validate_vocabulary(vocab);
  Generator g(vocab, free_vars, max_fanout, seed);
  std::vector<std::string> scope = free_vars;
  return g.gen(mode, n, m, scope);
}

}  // namespace fvkit
