#include "fvkit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fvkit/errors.hpp"

namespace fvkit {

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"=", "true", "false", "and",
                                              "or", "not", "exists", "forall"};
  return words;
}

bool is_symbol_char(char c) {
  static const std::string chars = "<>=!~+-*/^&|%@#$:.";
  return chars.find(c) != std::string::npos;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

bool is_variable_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return reserved_words().count(s) == 0;
}

bool is_relation_name(const std::string& s) {
  if (s.empty() || reserved_words().count(s)) return false;
  if (is_variable_name(s)) return true;
  return std::all_of(s.begin(), s.end(), is_symbol_char);
}

void validate_vocabulary(const Vocabulary& vocab) {
  for (const auto& [name, arity] : vocab) {
    if (!is_relation_name(name))
      throw InputError("invalid relation name '" + name + "'");
    if (arity < 1) throw InputError("relation '" + name + "' must have arity >= 1");
  }
}

int max_arity(const Vocabulary& vocab) {
  int p = 0;
  for (const auto& [name, arity] : vocab) p = std::max(p, arity);
  return p;
}

struct Formula::Node {
  NodeKind kind = NodeKind::Top;
  bool positive = true;
  std::string relation;
  std::vector<std::string> args;
  std::vector<Formula> children;  // body of a quantifier is children[0]
  std::string var;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool qf = true;
};

namespace {

std::shared_ptr<const Formula::Node> finish(std::shared_ptr<Formula::Node> n) {
  std::size_t h = static_cast<std::size_t>(n->kind) * 1315423911u;
  h = mix(h, n->positive);
  h = mix(h, std::hash<std::string>{}(n->relation));
  for (const auto& a : n->args) h = mix(h, std::hash<std::string>{}(a));
  h = mix(h, std::hash<std::string>{}(n->var));
  std::size_t size = 1;
  bool qf = n->kind != NodeKind::Exists && n->kind != NodeKind::Forall;
  for (const auto& c : n->children) {
    h = mix(h, c.hash());
    size += c.size();
    qf = qf && c.quantifier_free();
  }
  if (n->kind == NodeKind::Literal) size += n->args.size();
  n->hash = h;
  n->size = size;
  n->qf = qf;
  return n;
}

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula Formula::literal(bool positive, std::string relation, std::vector<std::string> args) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Literal;
  n->positive = positive;
  n->relation = std::move(relation);
  n->args = std::move(args);
  return Formula(finish(std::move(n)));
}

Formula Formula::equality(bool positive, std::string a, std::string b) {
  return literal(positive, "=", {std::move(a), std::move(b)});
}

Formula Formula::top() {
  static const std::shared_ptr<const Node> t = [] {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Top;
    return finish(std::move(n));
  }();
  return Formula(t);
}

Formula Formula::bot() {
  static const std::shared_ptr<const Node> b = [] {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Bot;
    return finish(std::move(n));
  }();
  return Formula(b);
}

Formula Formula::connective(NodeKind kind, std::vector<Formula> children) {
  if (children.empty()) return kind == NodeKind::And ? top() : bot();
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  return Formula(finish(std::move(n)));
}

Formula Formula::conj(std::vector<Formula> children) {
  return connective(NodeKind::And, std::move(children));
}

Formula Formula::disj(std::vector<Formula> children) {
  return connective(NodeKind::Or, std::move(children));
}

Formula Formula::quantifier(NodeKind kind, std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->var = std::move(var);
  n->children.push_back(std::move(body));
  return Formula(finish(std::move(n)));
}

Formula Formula::exists(std::string var, Formula body) {
  return quantifier(NodeKind::Exists, std::move(var), std::move(body));
}

Formula Formula::forall(std::string var, Formula body) {
  return quantifier(NodeKind::Forall, std::move(var), std::move(body));
}

NodeKind Formula::kind() const { return node_->kind; }
bool Formula::positive() const { return node_->positive; }
const std::string& Formula::relation() const { return node_->relation; }
const std::vector<std::string>& Formula::args() const { return node_->args; }
const std::vector<Formula>& Formula::children() const { return node_->children; }
const std::string& Formula::var() const { return node_->var; }
const Formula& Formula::body() const { return node_->children.front(); }
bool Formula::quantifier_free() const { return node_->qf; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  const Node& a = *node_;
  const Node& b = *o.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
  if (a.positive != b.positive || a.relation != b.relation || a.args != b.args ||
      a.var != b.var || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (a.children[i] != b.children[i]) return false;
  return true;
}

namespace {

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case NodeKind::Top:
      out += "true";
      return;
    case NodeKind::Bot:
      out += "false";
      return;
    case NodeKind::Literal:
      if (!f.positive()) out += "(not ";
      out += '(';
      out += f.relation();
      for (const auto& a : f.args()) {
        out += ' ';
        out += a;
      }
      out += ')';
      if (!f.positive()) out += ')';
      return;
    case NodeKind::And:
    case NodeKind::Or:
      out += f.kind() == NodeKind::And ? "(and" : "(or";
      for (const auto& c : f.children()) {
        out += ' ';
        print_into(c, out);
      }
      out += ')';
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
      out += f.kind() == NodeKind::Exists ? "(exists (" : "(forall (";
      out += f.var();
      out += ") ";
      print_into(f.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  out.reserve(f.size() * 4);
  print_into(f, out);
  return out;
}

void validate_formula(const Formula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case NodeKind::Literal: {
      if (f.relation() == "=") {
        if (f.args().size() != 2) throw InputError("'=' takes two arguments");
        return;
      }
      auto it = vocab.find(f.relation());
      if (it == vocab.end()) throw InputError("unknown relation '" + f.relation() + "'");
      if (static_cast<int>(f.args().size()) != it->second)
        throw InputError("arity mismatch for '" + f.relation() + "': expected " +
                         std::to_string(it->second) + ", got " +
                         std::to_string(f.args().size()));
      return;
    }
    case NodeKind::Top:
    case NodeKind::Bot:
      return;
    default:
      for (const auto& c : f.children()) validate_formula(c, vocab);
  }
}

Formula negate_dual(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Literal:
      return Formula::literal(!f.positive(), f.relation(), f.args());
    case NodeKind::Top:
      return Formula::bot();
    case NodeKind::Bot:
      return Formula::top();
    case NodeKind::And:
    case NodeKind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(negate_dual(c));
      return Formula::connective(f.kind() == NodeKind::And ? NodeKind::Or : NodeKind::And,
                                 std::move(cs));
    }
    case NodeKind::Exists:
      return Formula::forall(f.var(), negate_dual(f.body()));
    case NodeKind::Forall:
      return Formula::exists(f.var(), negate_dual(f.body()));
  }
  return f;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out, std::unordered_set<std::string>& seen) {
  switch (f.kind()) {
    case NodeKind::Literal:
      for (const auto& a : f.args()) {
        if (std::find(bound.begin(), bound.end(), a) != bound.end()) continue;
        if (seen.insert(a).second) out.push_back(a);
      }
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
      bound.push_back(f.var());
      collect_free(f.body(), bound, out, seen);
      bound.pop_back();
      return;
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out, seen);
  }
}

void collect_all(const Formula& f, std::vector<std::string>& out,
                 std::unordered_set<std::string>& seen) {
  if (f.is_literal())
    for (const auto& a : f.args())
      if (seen.insert(a).second) out.push_back(a);
  if (f.is_quantifier() && seen.insert(f.var()).second) out.push_back(f.var());
  for (const auto& c : f.children()) collect_all(c, out, seen);
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound, out;
  std::unordered_set<std::string> seen;
  collect_free(f, bound, out, seen);
  return out;
}

std::vector<std::string> all_variables(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_all(f, out, seen);
  return out;
}

int quantifier_rank(const Formula& f) {
  int best = 0;
  for (const auto& c : f.children()) best = std::max(best, quantifier_rank(c));
  return best + (f.is_quantifier() ? 1 : 0);
}

namespace {

bool check_alpha(const Formula& f, const std::set<std::string>& free,
                 std::set<std::string>& bound) {
  if (f.is_quantifier()) {
    if (free.count(f.var()) || !bound.insert(f.var()).second) return false;
  }
  for (const auto& c : f.children())
    if (!check_alpha(c, free, bound)) return false;
  return true;
}

class AlphaRenamer {
 public:
  explicit AlphaRenamer(const Formula& f) {
    auto fv = free_variables(f);
    free_.insert(fv.begin(), fv.end());
    auto all = all_variables(f);
    used_.insert(all.begin(), all.end());
  }

  Formula run(const Formula& f, std::map<std::string, std::string>& env) {
    switch (f.kind()) {
      case NodeKind::Literal: {
        std::vector<std::string> args = f.args();
        for (auto& a : args) {
          auto it = env.find(a);
          if (it != env.end()) a = it->second;
        }
        return Formula::literal(f.positive(), f.relation(), std::move(args));
      }
      case NodeKind::Top:
      case NodeKind::Bot:
        return f;
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<Formula> cs;
        for (const auto& c : f.children()) cs.push_back(run(c, env));
        return Formula::connective(f.kind(), std::move(cs));
      }
      case NodeKind::Exists:
      case NodeKind::Forall: {
        std::string name = f.var();
        if (free_.count(name) || bound_.count(name)) name = fresh(name);
        bound_.insert(name);
        auto saved = env.find(f.var()) == env.end()
                         ? std::optional<std::string>{}
                         : std::optional<std::string>{env[f.var()]};
        env[f.var()] = name;
        Formula body = run(f.body(), env);
        if (saved) env[f.var()] = *saved;
        else env.erase(f.var());
        return Formula::quantifier(f.kind(), name, body);
      }
    }
    return f;
  }

 private:
  std::string fresh(const std::string& base) {
    for (int i = 1;; ++i) {
      std::string cand = base + "_" + std::to_string(i);
      if (!used_.count(cand)) {
        used_.insert(cand);
        return cand;
      }
    }
  }

  std::set<std::string> free_, used_, bound_;
};

}  // namespace

bool is_alpha_normalized(const Formula& f) {
  auto fv = free_variables(f);
  std::set<std::string> free(fv.begin(), fv.end()), bound;
  return check_alpha(f, free, bound);
}

Formula alpha_normalize(const Formula& f) {
  if (is_alpha_normalized(f)) return f;
  AlphaRenamer r(f);
  std::map<std::string, std::string> env;
  return r.run(f, env);
}

Formula substitute(const Formula& f, const std::map<std::string, std::string>& m) {
  switch (f.kind()) {
    case NodeKind::Literal: {
      std::vector<std::string> args = f.args();
      for (auto& a : args) {
        auto it = m.find(a);
        if (it != m.end()) a = it->second;
      }
      return Formula::literal(f.positive(), f.relation(), std::move(args));
    }
    case NodeKind::Top:
    case NodeKind::Bot:
      return f;
    case NodeKind::And:
    case NodeKind::Or: {
      std::vector<Formula> cs;
      for (const auto& c : f.children()) cs.push_back(substitute(c, m));
      return Formula::connective(f.kind(), std::move(cs));
    }
    case NodeKind::Exists:
    case NodeKind::Forall: {
      if (!m.count(f.var())) return Formula::quantifier(f.kind(), f.var(), substitute(f.body(), m));
      auto inner = m;
      inner.erase(f.var());
      return Formula::quantifier(f.kind(), f.var(), substitute(f.body(), inner));
    }
  }
  return f;
}

Formula fold_constants(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::And:
    case NodeKind::Or: {
      const bool is_and = f.kind() == NodeKind::And;
      const NodeKind unit = is_and ? NodeKind::Top : NodeKind::Bot;
      const NodeKind zero = is_and ? NodeKind::Bot : NodeKind::Top;
      std::vector<Formula> cs;
      for (const auto& c : f.children()) {
        Formula g = fold_constants(c);
        if (g.kind() == zero) return g;
        if (g.kind() != unit) cs.push_back(g);
      }
      return Formula::connective(f.kind(), std::move(cs));
    }
    case NodeKind::Exists:
    case NodeKind::Forall:
      return Formula::quantifier(f.kind(), f.var(), fold_constants(f.body()));
    default:
      return f;
  }
}

}  // namespace fvkit
