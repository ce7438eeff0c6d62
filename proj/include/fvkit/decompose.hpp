#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fvkit/formula.hpp"
#include "fvkit/interp.hpp"
#include "fvkit/structure.hpp"

namespace fvkit {

enum class PropKind { Var, Top, Bot, And, Or };

// Negation-free propositional combiner over X_{i,j} = "factor i holds on side j".
class Prop {
 public:
  Prop();  // PTop
  static Prop var(std::size_t index, int side);
  static Prop top();
  static Prop bot();
  static Prop conj(std::vector<Prop> children);  // kept as given, no flattening
  static Prop disj(std::vector<Prop> children);

  PropKind kind() const;
  std::size_t index() const;
  int side() const;
  const std::vector<Prop>& children() const;
  std::size_t size() const;  // node count

  bool operator==(const Prop& o) const;
  bool operator!=(const Prop& o) const { return !(*this == o); }

 private:
  struct Node;
  explicit Prop(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string print_prop(const Prop& p);
Prop shift_prop(const Prop& p, std::size_t offset1, std::size_t offset2);
bool eval_prop(const Prop& p, const std::vector<bool>& side1, const std::vector<bool>& side2);

struct VarPartition {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

struct ReductionSequence {
  std::vector<Formula> delta1;
  std::vector<Formula> delta2;
  Prop beta;
  VarPartition partition;
  Vocabulary vocab;  // vocabulary of the factors
};

struct DecomposeOptions {
  bool simplify = false;
  bool memoize = true;
  std::uint64_t max_pairs = 1ULL << 22;  // cap on distributed terms per normalization
};

// Pair normal form: OR of (X_{i,1} AND X_{j,2}) for Sigma, AND of ORs for Pi.
bool is_pair_form(const Prop& beta, Mode mode);
void check_well_formed(const ReductionSequence& d);

// f is over vocab, which may contain the marker P; the factors are over vocab minus P.
ReductionSequence decompose(const Formula& f, const Vocabulary& vocab, const VarPartition& part,
                            const DecomposeOptions& opts = {});
ReductionSequence normalize_pairs(const ReductionSequence& d, Mode mode,
                                  std::uint64_t max_pairs = DecomposeOptions{}.max_pairs);
ReductionSequence decompose_over_op(const Formula& f, const SumLikeOp& op,
                                    const VarPartition& part, const DecomposeOptions& opts = {});

// Truth values of a factor list on one side, one entry per factor.
std::vector<bool> factor_values(const std::vector<Formula>& factors,
                                const std::vector<std::string>& vars, const Structure& s,
                                const Tuple& values);
// Factor values for every tuple over vars, in all_index_tuples order.
std::vector<std::vector<bool>> factor_table(const std::vector<Formula>& factors,
                                            const std::vector<std::string>& vars,
                                            const Structure& s);
bool eval_reduction(const ReductionSequence& d, const Structure& a1, const Structure& a2,
                    const Tuple& t1, const Tuple& t2);

struct ReductionStats {
  std::size_t total_size = 0;
  std::size_t factor_count_1 = 0;
  std::size_t factor_count_2 = 0;
  std::size_t beta_size = 0;
};
ReductionStats reduction_stats(const ReductionSequence& d);

ReductionSequence simplify_reduction(const ReductionSequence& d);

}  // namespace fvkit
