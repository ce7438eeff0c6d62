#include "fvkit/modelcheck.hpp"

#include "fvkit/errors.hpp"

namespace fvkit {

CompiledFormula::CompiledFormula(const Formula& f, const Structure& s,
                                 const std::vector<std::string>& context)
    : context_size_(static_cast<int>(context.size())), n_(s.size()) {
  std::vector<std::pair<std::string, int>> scope;
  for (std::size_t i = 0; i < context.size(); ++i)
    scope.emplace_back(context[i], static_cast<int>(i));
  slots_ = context_size_;
  ops_.reserve(f.size());
  structure_ = &s;
  root_ = compile(f, scope);
}

int CompiledFormula::compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope) {
  Op op;
  op.kind = f.kind();
  switch (f.kind()) {
    case NodeKind::Literal: {
      op.positive = f.positive();
      op.is_equality = f.relation() == "=";
      if (!op.is_equality) {
        auto it = structure_->vocab().find(f.relation());
        if (it == structure_->vocab().end())
          throw InputError("relation '" + f.relation() + "' not in the structure's vocabulary");
        if (it->second != static_cast<int>(f.args().size()))
          throw InputError("arity mismatch for '" + f.relation() + "'");
        op.table = structure_->table(f.relation()).data();
      }
      for (const auto& a : f.args()) {
        int slot = -1;
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
          if (it->first == a) {
            slot = it->second;
            break;
          }
        if (slot < 0) throw InputError("unbound free variable '" + a + "'");
        op.slots.push_back(slot);
      }
      break;
    }
    case NodeKind::Top:
    case NodeKind::Bot:
      break;
    case NodeKind::And:
    case NodeKind::Or:
      for (const auto& c : f.children()) op.kids.push_back(compile(c, scope));
      break;
    case NodeKind::Exists:
    case NodeKind::Forall: {
      const int slot = slots_++;
      op.slots.push_back(slot);
      scope.emplace_back(f.var(), slot);
      op.kids.push_back(compile(f.body(), scope));
      scope.pop_back();
      break;
    }
  }
  ops_.push_back(std::move(op));
  return static_cast<int>(ops_.size()) - 1;
}

bool CompiledFormula::run(int i, std::vector<int>& env, std::uint64_t& budget) const {
  const Op& op = ops_[i];
  switch (op.kind) {
    case NodeKind::Top:
      return true;
    case NodeKind::Bot:
      return false;
    case NodeKind::Literal: {
      if (budget == 0) throw CapExceeded("model checking work cap exceeded");
      --budget;
      bool v;
      if (op.is_equality) {
        v = env[op.slots[0]] == env[op.slots[1]];
      } else {
        std::uint64_t idx = 0;
        for (int s : op.slots) idx = idx * n_ + env[s];
        v = op.table[idx] != 0;
      }
      return v == op.positive;
    }
    case NodeKind::And:
      for (int k : op.kids)
        if (!run(k, env, budget)) return false;
      return true;
    case NodeKind::Or:
      for (int k : op.kids)
        if (run(k, env, budget)) return true;
      return false;
    case NodeKind::Exists:
    case NodeKind::Forall: {
      const bool want = op.kind == NodeKind::Exists;
      const int slot = op.slots[0];
      for (int e = 0; e < n_; ++e) {
        env[slot] = e;
        if (run(op.kids[0], env, budget) == want) return want;
      }
      return !want;
    }
  }
  return false;
}

bool CompiledFormula::eval(const std::vector<int>& values, std::uint64_t max_atom_checks) const {
  if (static_cast<int>(values.size()) != context_size_)
    throw InputError("assignment length does not match the variable context");
  std::vector<int> env(slots_, 0);
  for (int i = 0; i < context_size_; ++i) env[i] = values[i];
  std::uint64_t budget = max_atom_checks;
  return run(root_, env, budget);
}

bool eval(const Structure& a, const Formula& f, const Assignment& asg,
          std::uint64_t max_atom_checks) {
  std::vector<std::string> context;
  std::vector<int> values;
  for (const auto& v : free_variables(f)) {
    auto it = asg.find(v);
    if (it == asg.end()) throw InputError("unbound free variable '" + v + "'");
    context.push_back(v);
    values.push_back(a.index_of(it->second));
  }
  CompiledFormula c(f, a, context);
  return c.eval(values, max_atom_checks);
}

}  // namespace fvkit
