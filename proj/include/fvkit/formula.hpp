#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fvkit {

// Relation name -> arity. "=" is built in and never listed.
using Vocabulary = std::map<std::string, int>;

void validate_vocabulary(const Vocabulary& vocab);
int max_arity(const Vocabulary& vocab);
bool is_variable_name(const std::string& s);
bool is_relation_name(const std::string& s);

enum class NodeKind { Literal, Top, Bot, And, Or, Exists, Forall };

enum class Mode { Sigma, Pi };

// Immutable NNF formula. Copies share structure; equality is structural.
class Formula {
 public:
  Formula();  // true

  static Formula literal(bool positive, std::string relation, std::vector<std::string> args);
  static Formula equality(bool positive, std::string a, std::string b);
  static Formula top();
  static Formula bot();
  // Arity-1 collapses to the child; an empty list gives true / false.
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula quantifier(NodeKind kind, std::string var, Formula body);
  static Formula connective(NodeKind kind, std::vector<Formula> children);

  NodeKind kind() const;
  bool is_literal() const { return kind() == NodeKind::Literal; }
  bool is_quantifier() const { return kind() == NodeKind::Exists || kind() == NodeKind::Forall; }
  bool is_connective() const { return kind() == NodeKind::And || kind() == NodeKind::Or; }

  bool positive() const;
  const std::string& relation() const;
  const std::vector<std::string>& args() const;
  const std::vector<Formula>& children() const;
  const std::string& var() const;
  const Formula& body() const;

  bool quantifier_free() const;
  std::size_t size() const;  // AST node count, literal = 1 + arity
  std::size_t hash() const;
  const void* identity() const { return node_.get(); }

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

std::string print_formula(const Formula& f);
Formula parse_formula(const std::string& text, const Vocabulary& vocab);
// Vocabulary read off the text itself: every relation at the arity of its first use.
Vocabulary infer_vocabulary(const std::string& text);

// Checks relation names and arities against vocab (throws InputError).
void validate_formula(const Formula& f, const Vocabulary& vocab);

Formula negate_dual(const Formula& f);
std::vector<std::string> free_variables(const Formula& f);
// Every variable name occurring anywhere, bound or free.
std::vector<std::string> all_variables(const Formula& f);
int quantifier_rank(const Formula& f);

bool is_alpha_normalized(const Formula& f);
// Renames bound variables so that they are pairwise distinct and distinct from
// the free variables. Already-normalized input is returned unchanged.
Formula alpha_normalize(const Formula& f);

// Simultaneous renaming of free variables. Bound names must not clash with
// the images (true for the quantifier-free formulas this is used on).
Formula substitute(const Formula& f, const std::map<std::string, std::string>& m);

// Drops true conjuncts / false disjuncts and absorbs the dual constants.
Formula fold_constants(const Formula& f);

struct Classification {
  int sigma_level = 0;
  int pi_level = 0;
  int rank = 0;
  std::optional<int> block_uniform_k;
};

bool in_sigma(const Formula& f, int level);
bool in_pi(const Formula& f, int level);
Classification classify(const Formula& f);
std::optional<int> block_uniform_k(const Formula& f);

Formula random_formula(Mode mode, int n, int m, const Vocabulary& vocab,
                       const std::vector<std::string>& free_vars, int max_fanout,
                       std::uint64_t seed);

}  // namespace fvkit
