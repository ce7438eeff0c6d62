#include "fvkit/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <iterator>
#include <unordered_map>
#include <unordered_set>

#include "fvkit/errors.hpp"
#include "fvkit/modelcheck.hpp"

namespace fvkit {

struct Prop::Node {
  PropKind kind = PropKind::Top;
  std::size_t index = 0;
  int side = 1;
  std::vector<Prop> children;
  std::size_t size = 1;
};

Prop::Prop() : Prop(top()) {}

Prop Prop::var(std::size_t index, int side) {
  if (side != 1 && side != 2) throw InputError("propositional variable side must be 1 or 2");
  auto n = std::make_shared<Node>();
  n->kind = PropKind::Var;
  n->index = index;
  n->side = side;
  return Prop(std::move(n));
}

Prop Prop::top() {
  static const auto t = [] {
    auto n = std::make_shared<Node>();
    n->kind = PropKind::Top;
    return std::shared_ptr<const Node>(n);
  }();
  return Prop(t);
}

Prop Prop::bot() {
  static const auto b = [] {
    auto n = std::make_shared<Node>();
    n->kind = PropKind::Bot;
    return std::shared_ptr<const Node>(n);
  }();
  return Prop(b);
}

Prop Prop::conj(std::vector<Prop> children) {
  auto n = std::make_shared<Node>();
  n->kind = PropKind::And;
  for (const auto& c : children) n->size += c.size();
  n->children = std::move(children);
  return Prop(std::move(n));
}

Prop Prop::disj(std::vector<Prop> children) {
  auto n = std::make_shared<Node>();
  n->kind = PropKind::Or;
  for (const auto& c : children) n->size += c.size();
  n->children = std::move(children);
  return Prop(std::move(n));
}

PropKind Prop::kind() const { return node_->kind; }
std::size_t Prop::index() const { return node_->index; }
int Prop::side() const { return node_->side; }
const std::vector<Prop>& Prop::children() const { return node_->children; }
std::size_t Prop::size() const { return node_->size; }

bool Prop::operator==(const Prop& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind() || size() != o.size()) return false;
  if (kind() == PropKind::Var) return index() == o.index() && side() == o.side();
  if (children().size() != o.children().size()) return false;
  for (std::size_t i = 0; i < children().size(); ++i)
    if (children()[i] != o.children()[i]) return false;
  return true;
}

std::string print_prop(const Prop& p) {
  switch (p.kind()) {
    case PropKind::Var:
      return "X" + std::to_string(p.index()) + "_" + std::to_string(p.side());
    case PropKind::Top:
      return "T";
    case PropKind::Bot:
      return "F";
    default: {
      std::string out = p.kind() == PropKind::And ? "(and" : "(or";
      for (const auto& c : p.children()) out += " " + print_prop(c);
      return out + ")";
    }
  }
}

Prop shift_prop(const Prop& p, std::size_t offset1, std::size_t offset2) {
  switch (p.kind()) {
    case PropKind::Var:
      return Prop::var(p.index() + (p.side() == 1 ? offset1 : offset2), p.side());
    case PropKind::Top:
    case PropKind::Bot:
      return p;
    default: {
      std::vector<Prop> cs;
      cs.reserve(p.children().size());
      for (const auto& c : p.children()) cs.push_back(shift_prop(c, offset1, offset2));
      return p.kind() == PropKind::And ? Prop::conj(std::move(cs)) : Prop::disj(std::move(cs));
    }
  }
}

bool eval_prop(const Prop& p, const std::vector<bool>& side1, const std::vector<bool>& side2) {
  switch (p.kind()) {
    case PropKind::Var: {
      const auto& v = p.side() == 1 ? side1 : side2;
      if (p.index() >= v.size()) throw InputError("propositional variable out of range");
      return v[p.index()];
    }
    case PropKind::Top:
      return true;
    case PropKind::Bot:
      return false;
    case PropKind::And:
      for (const auto& c : p.children())
        if (!eval_prop(c, side1, side2)) return false;
      return true;
    case PropKind::Or:
      for (const auto& c : p.children())
        if (eval_prop(c, side1, side2)) return true;
      return false;
  }
  return false;
}

namespace {

bool is_pair(const Prop& p, PropKind inner) {
  return p.kind() == inner && p.children().size() == 2 &&
         p.children()[0].kind() == PropKind::Var && p.children()[0].side() == 1 &&
         p.children()[1].kind() == PropKind::Var && p.children()[1].side() == 2;
}

}  // namespace

bool is_pair_form(const Prop& beta, Mode mode) {
  const PropKind outer = mode == Mode::Sigma ? PropKind::Or : PropKind::And;
  const PropKind inner = mode == Mode::Sigma ? PropKind::And : PropKind::Or;
  const PropKind empty = mode == Mode::Sigma ? PropKind::Bot : PropKind::Top;
  if (beta.kind() == empty) return true;
  if (beta.kind() != outer) return false;
  return std::all_of(beta.children().begin(), beta.children().end(),
                     [&](const Prop& c) { return is_pair(c, inner); });
}

namespace {

void check_vars(const Prop& p, std::size_t n1, std::size_t n2) {
  if (p.kind() == PropKind::Var && p.index() >= (p.side() == 1 ? n1 : n2))
    throw InputError("propositional variable refers past the factor list");
  for (const auto& c : p.children()) check_vars(c, n1, n2);
}

void check_side(const std::vector<Formula>& fs, const std::vector<std::string>& vars,
                const Vocabulary& vocab) {
  for (const auto& f : fs) {
    validate_formula(f, vocab);
    for (const auto& v : free_variables(f))
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        throw InputError("factor uses variable '" + v + "' from the other side");
  }
}

}  // namespace

void check_well_formed(const ReductionSequence& d) {
  if (d.vocab.count(kMarker)) throw InputError("factor vocabulary must not contain P");
  check_vars(d.beta, d.delta1.size(), d.delta2.size());
  check_side(d.delta1, d.partition.left, d.vocab);
  check_side(d.delta2, d.partition.right, d.vocab);
}

namespace {

enum class Form { Raw, Sigma, Pi };

struct Part {
  std::vector<Formula> d1, d2;
  Prop beta;
  Form form = Form::Raw;
};
using PartPtr = std::shared_ptr<const Part>;

Form form_of(Mode m) { return m == Mode::Sigma ? Form::Sigma : Form::Pi; }

Prop fold_prop(const Prop& p, const std::vector<Formula>& d1, const std::vector<Formula>& d2) {
  switch (p.kind()) {
    case PropKind::Var: {
      const Formula& f = (p.side() == 1 ? d1 : d2)[p.index()];
      if (f.kind() == NodeKind::Top) return Prop::top();
      if (f.kind() == NodeKind::Bot) return Prop::bot();
      return p;
    }
    case PropKind::Top:
    case PropKind::Bot:
      return p;
    default: {
      const bool is_and = p.kind() == PropKind::And;
      std::vector<Prop> cs;
      for (const auto& c : p.children()) {
        Prop g = fold_prop(c, d1, d2);
        if (g.kind() == (is_and ? PropKind::Bot : PropKind::Top)) return g;
        if (g.kind() != (is_and ? PropKind::Top : PropKind::Bot)) cs.push_back(g);
      }
      if (cs.empty()) return is_and ? Prop::top() : Prop::bot();
      if (cs.size() == 1) return cs.front();
      return is_and ? Prop::conj(std::move(cs)) : Prop::disj(std::move(cs));
    }
  }
}

using Term = std::vector<std::pair<std::size_t, int>>;  // sorted, no repeats

struct TermHash {
  std::size_t operator()(const Term& t) const {
    std::size_t h = t.size();
    for (const auto& [i, s] : t) h = h * 1000003u ^ (i * 2 + static_cast<std::size_t>(s));
    return h;
  }
};

// Drops repeated terms and terms that contain another term; survivors keep
// their relative order.
void absorb(std::vector<Term>& ts) {
  std::unordered_set<Term, TermHash> seen;
  std::vector<Term> uniq;
  for (auto& t : ts)
    if (seen.insert(t).second) uniq.push_back(std::move(t));
  ts = std::move(uniq);
  if (ts.size() > 4000) return;
  std::vector<std::size_t> order(ts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ts[a].size() < ts[b].size(); });
  std::vector<char> keep(ts.size(), 0);
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool redundant = false;
    for (std::size_t k : kept)
      if (std::includes(ts[i].begin(), ts[i].end(), ts[k].begin(), ts[k].end())) {
        redundant = true;
        break;
      }
    if (!redundant) {
      keep[i] = 1;
      kept.push_back(i);
    }
  }
  std::vector<Term> out;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (keep[i]) out.push_back(std::move(ts[i]));
  ts = std::move(out);
}

// Distributes beta into a sum of products: disjunction of conjunctions for
// Sigma, conjunction of disjunctions for Pi. Products enumerate child
// choices lexicographically, earlier children most significant. Variables
// whose factors are equal formulas are identified.
class Distributor {
 public:
  Distributor(const std::vector<Formula>& d1, const std::vector<Formula>& d2, Mode mode,
              std::uint64_t cap)
      : mode_(mode), cap_(cap), canon1_(canonical(d1)), canon2_(canonical(d2)) {}

  std::vector<Term> run(const Prop& p) {
    const PropKind sum = mode_ == Mode::Sigma ? PropKind::Or : PropKind::And;
    const PropKind unit = mode_ == Mode::Sigma ? PropKind::Top : PropKind::Bot;
    switch (p.kind()) {
      case PropKind::Var: {
        const auto& canon = p.side() == 1 ? canon1_ : canon2_;
        return {Term{{canon.at(p.index()), p.side()}}};
      }
      case PropKind::Top:
      case PropKind::Bot:
        if (p.kind() == unit) return {Term{}};
        return {};
      default:
        break;
    }
    std::vector<Term> acc;
    if (p.kind() == sum) {
      for (const auto& c : p.children()) {
        auto part = run(c);
        if (acc.size() + part.size() > cap_) throw CapExceeded("normalization exceeds the term cap");
        acc.insert(acc.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      absorb(acc);
      return acc;
    }
    acc.emplace_back();
    for (const auto& c : p.children()) {
      auto part = run(c);
      if (static_cast<double>(acc.size()) * static_cast<double>(part.size()) >
          static_cast<double>(cap_))
        throw CapExceeded("normalization exceeds the term cap");
      std::vector<Term> next;
      next.reserve(acc.size() * part.size());
      for (const auto& a : acc)
        for (const auto& b : part) {
          Term t;
          t.reserve(a.size() + b.size());
          std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(t));
          next.push_back(std::move(t));
        }
      absorb(next);
      acc = std::move(next);
    }
    return acc;
  }

 private:
  static std::vector<std::size_t> canonical(const std::vector<Formula>& d) {
    std::unordered_map<Formula, std::size_t, FormulaHash> first;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.size(); ++i) out.push_back(first.emplace(d[i], i).first->second);
    return out;
  }

  Mode mode_;
  std::uint64_t cap_;
  std::vector<std::size_t> canon1_, canon2_;
};

Prop pair_beta(std::size_t count, Mode mode) {
  std::vector<Prop> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Prop> two{Prop::var(i, 1), Prop::var(i, 2)};
    pairs.push_back(mode == Mode::Sigma ? Prop::conj(std::move(two)) : Prop::disj(std::move(two)));
  }
  return mode == Mode::Sigma ? Prop::disj(std::move(pairs)) : Prop::conj(std::move(pairs));
}

Part normalize_part(const std::vector<Formula>& d1, const std::vector<Formula>& d2,
                    const Prop& beta, Mode mode, std::uint64_t cap) {
  auto terms = Distributor(d1, d2, mode, cap).run(fold_prop(beta, d1, d2));
  const NodeKind group = mode == Mode::Sigma ? NodeKind::And : NodeKind::Or;
  Part out;
  out.form = form_of(mode);
  out.d1.reserve(terms.size());
  out.d2.reserve(terms.size());
  for (const auto& term : terms) {
    std::vector<Formula> g1, g2;
    for (const auto& v : term)
      (v.second == 1 ? g1 : g2).push_back(v.second == 1 ? d1.at(v.first) : d2.at(v.first));
    out.d1.push_back(Formula::connective(group, std::move(g1)));
    out.d2.push_back(Formula::connective(group, std::move(g2)));
  }
  out.beta = pair_beta(terms.size(), mode);
  return out;
}

class Decomposer {
 public:
  Decomposer(const DecomposeOptions& opts, std::map<std::string, int> sides)
      : opts_(opts), sides_(std::move(sides)) {}

  PartPtr run(const Formula& f) {
    std::string key;
    if (opts_.memoize) {
      key = memo_key(f);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    PartPtr r = f.quantifier_free() ? std::make_shared<const Part>(qf(f)) : quantified(f);
    if (opts_.memoize) memo_.emplace(std::move(key), r);
    return r;
  }

  PartPtr to_mode(const PartPtr& p, Mode mode) {
    if (p->form == form_of(mode)) return p;
    return std::make_shared<const Part>(normalize_part(p->d1, p->d2, p->beta, mode, opts_.max_pairs));
  }

 private:
  int side_of(const std::string& v) const {
    auto it = sides_.find(v);
    if (it == sides_.end()) throw InputError("unpartitioned free variable '" + v + "'");
    return it->second;
  }

  std::string memo_key(const Formula& f) {
    auto it = free_.find(f.identity());
    if (it == free_.end()) it = free_.emplace(f.identity(), free_variables(f)).first;
    std::string key;
    const void* id = f.identity();
    key.append(reinterpret_cast<const char*>(&id), sizeof id);
    for (const auto& v : it->second) key.push_back(static_cast<char>('0' + side_of(v)));
    return key;
  }

  Part qf(const Formula& f) {
    Part out;
    switch (f.kind()) {
      case NodeKind::Top:
        out.beta = Prop::top();
        return out;
      case NodeKind::Bot:
        out.beta = Prop::bot();
        return out;
      case NodeKind::Literal: {
        if (f.relation() == kMarker) {
          const bool left = side_of(f.args().front()) == 1;
          out.beta = f.positive() == left ? Prop::top() : Prop::bot();
          return out;
        }
        const int s = side_of(f.args().front());
        bool mixed = false;
        for (const auto& a : f.args()) mixed = mixed || side_of(a) != s;
        if (mixed) {
          out.beta = f.positive() ? Prop::bot() : Prop::top();
          return out;
        }
        out.d1.push_back(s == 1 ? f : Formula::top());
        out.d2.push_back(s == 2 ? f : Formula::top());
        out.beta = Prop::conj({Prop::var(0, 1), Prop::var(0, 2)});
        return out;
      }
      default: {
        std::vector<Prop> betas;
        for (const auto& c : f.children()) {
          PartPtr r = run(c);
          betas.push_back(shift_prop(r->beta, out.d1.size(), out.d2.size()));
          out.d1.insert(out.d1.end(), r->d1.begin(), r->d1.end());
          out.d2.insert(out.d2.end(), r->d2.begin(), r->d2.end());
        }
        out.beta = f.kind() == NodeKind::And ? Prop::conj(std::move(betas))
                                             : Prop::disj(std::move(betas));
        return out;
      }
    }
  }

  PartPtr quantified(const Formula& f) {
    if (f.is_quantifier()) {
      const Mode mode = f.kind() == NodeKind::Exists ? Mode::Sigma : Mode::Pi;
      const std::string& z = f.var();
      auto saved = sides_.find(z) == sides_.end() ? 0 : sides_[z];
      sides_[z] = 1;
      PartPtr left = to_mode(run(f.body()), mode);
      sides_[z] = 2;
      PartPtr right = to_mode(run(f.body()), mode);
      if (saved) sides_[z] = saved;
      else sides_.erase(z);

      Part out;
      out.form = form_of(mode);
      for (std::size_t i = 0; i < left->d1.size(); ++i) {
        out.d1.push_back(Formula::quantifier(f.kind(), z, left->d1[i]));
        out.d2.push_back(left->d2[i]);
      }
      for (std::size_t i = 0; i < right->d1.size(); ++i) {
        out.d1.push_back(right->d1[i]);
        out.d2.push_back(Formula::quantifier(f.kind(), z, right->d2[i]));
      }
      out.beta = pair_beta(out.d1.size(), mode);
      return std::make_shared<const Part>(std::move(out));
    }
    // Connective with quantified children.
    const Mode mode = f.kind() == NodeKind::And ? Mode::Sigma : Mode::Pi;
    const Mode dual = mode == Mode::Sigma ? Mode::Pi : Mode::Sigma;
    std::vector<Formula> d1, d2;
    std::vector<Prop> betas;
    for (const auto& c : f.children()) {
      PartPtr r = run(c);
      if (!c.quantifier_free()) r = to_mode(r, dual);
      betas.push_back(shift_prop(r->beta, d1.size(), d2.size()));
      d1.insert(d1.end(), r->d1.begin(), r->d1.end());
      d2.insert(d2.end(), r->d2.begin(), r->d2.end());
    }
    Prop combined = mode == Mode::Sigma ? Prop::conj(std::move(betas)) : Prop::disj(std::move(betas));
    return std::make_shared<const Part>(normalize_part(d1, d2, combined, mode, opts_.max_pairs));
  }

  const DecomposeOptions& opts_;
  std::map<std::string, int> sides_;
  std::unordered_map<std::string, PartPtr> memo_;
  std::unordered_map<const void*, std::vector<std::string>> free_;
};

Vocabulary without_marker(const Vocabulary& v) {
  Vocabulary out = v;
  out.erase(kMarker);
  return out;
}

}  // namespace

ReductionSequence decompose(const Formula& input, const Vocabulary& vocab, const VarPartition& part,
                            const DecomposeOptions& opts) {
  validate_vocabulary(vocab);
  auto pm = vocab.find(kMarker);
  if (pm != vocab.end() && pm->second != 1) throw InputError("marker P must be unary");
  std::map<std::string, int> sides;
  for (const auto& v : part.left)
    if (!sides.emplace(v, 1).second) throw InputError("variable '" + v + "' listed twice");
  for (const auto& v : part.right)
    if (!sides.emplace(v, 2).second) throw InputError("partition sides must be disjoint");
  const Formula f = alpha_normalize(input);
  std::function<void(const Formula&)> scan = [&](const Formula& g) {
    if (g.is_literal() && g.relation() == kMarker && pm == vocab.end())
      throw InputError("formula uses P but the vocabulary lacks it");
    for (const auto& c : g.children()) scan(c);
  };
  scan(f);
  validate_formula(f, vocab);
  for (const auto& v : free_variables(f))
    if (!sides.count(v)) throw InputError("unpartitioned free variable '" + v + "'");

  Decomposer dec(opts, sides);
  PartPtr root = dec.run(f);
  ReductionSequence d;
  d.delta1 = root->d1;
  d.delta2 = root->d2;
  d.beta = root->beta;
  d.partition = part;
  d.vocab = without_marker(vocab);
  return opts.simplify ? simplify_reduction(d) : d;
}

ReductionSequence normalize_pairs(const ReductionSequence& d, Mode mode, std::uint64_t max_pairs) {
  if (is_pair_form(d.beta, mode) && d.beta.kind() != PropKind::Top && d.beta.kind() != PropKind::Bot)
    return d;
  Part p = normalize_part(d.delta1, d.delta2, d.beta, mode, max_pairs);
  ReductionSequence out = d;
  out.delta1 = std::move(p.d1);
  out.delta2 = std::move(p.d2);
  out.beta = p.beta;
  return out;
}

ReductionSequence decompose_over_op(const Formula& f, const SumLikeOp& op,
                                    const VarPartition& part, const DecomposeOptions& opts) {
  validate_formula(f, op.vocab());
  return decompose(transform_formula(op.interp, f), op.interp.source_vocab, part, opts);
}

std::vector<bool> factor_values(const std::vector<Formula>& factors,
                                const std::vector<std::string>& vars, const Structure& s,
                                const Tuple& values) {
  if (values.size() != vars.size()) throw InputError("tuple length does not match the partition");
  std::vector<int> idx;
  for (const auto& e : values) idx.push_back(s.index_of(e));
  std::unordered_map<Formula, bool, FormulaHash> cache;
  std::vector<bool> out;
  out.reserve(factors.size());
  for (const auto& f : factors) {
    auto it = cache.find(f);
    if (it == cache.end()) it = cache.emplace(f, CompiledFormula(f, s, vars).eval(idx)).first;
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::vector<bool>> factor_table(const std::vector<Formula>& factors,
                                            const std::vector<std::string>& vars,
                                            const Structure& s) {
  const auto tuples = all_index_tuples(s.size(), static_cast<int>(vars.size()));
  std::vector<std::vector<bool>> out(tuples.size(), std::vector<bool>(factors.size()));
  std::unordered_map<Formula, std::size_t, FormulaHash> first;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto [it, fresh] = first.emplace(factors[i], i);
    if (!fresh) {
      for (auto& row : out) row[i] = row[it->second];
      continue;
    }
    CompiledFormula cf(factors[i], s, vars);
    for (std::size_t t = 0; t < tuples.size(); ++t) out[t][i] = cf.eval(tuples[t]);
  }
  return out;
}

bool eval_reduction(const ReductionSequence& d, const Structure& a1, const Structure& a2,
                    const Tuple& t1, const Tuple& t2) {
  if (a1.vocab() != d.vocab || a2.vocab() != d.vocab)
    throw InputError("structure vocabulary does not match the reduction sequence");
  auto z1 = factor_values(d.delta1, d.partition.left, a1, t1);
  auto z2 = factor_values(d.delta2, d.partition.right, a2, t2);
  return eval_prop(d.beta, z1, z2);
}

ReductionStats reduction_stats(const ReductionSequence& d) {
  ReductionStats s;
  s.factor_count_1 = d.delta1.size();
  s.factor_count_2 = d.delta2.size();
  s.beta_size = d.beta.size();
  s.total_size = s.beta_size;
  for (const auto& f : d.delta1) s.total_size += f.size();
  for (const auto& f : d.delta2) s.total_size += f.size();
  return s;
}

namespace {

void collect_used(const Prop& p, std::set<std::pair<std::size_t, int>>& used) {
  if (p.kind() == PropKind::Var) used.insert({p.index(), p.side()});
  for (const auto& c : p.children()) collect_used(c, used);
}

Prop reindex(const Prop& p, const std::map<std::pair<std::size_t, int>, std::size_t>& m) {
  switch (p.kind()) {
    case PropKind::Var:
      return Prop::var(m.at({p.index(), p.side()}), p.side());
    case PropKind::Top:
    case PropKind::Bot:
      return p;
    default: {
      std::vector<Prop> cs;
      for (const auto& c : p.children()) cs.push_back(reindex(c, m));
      return p.kind() == PropKind::And ? Prop::conj(std::move(cs)) : Prop::disj(std::move(cs));
    }
  }
}

}  // namespace

ReductionSequence simplify_reduction(const ReductionSequence& d) {
  ReductionSequence out = d;
  for (Mode mode : {Mode::Sigma, Mode::Pi}) {
    if (!is_pair_form(d.beta, mode)) continue;
    const NodeKind absorbing = mode == Mode::Sigma ? NodeKind::Bot : NodeKind::Top;
    out.delta1.clear();
    out.delta2.clear();
    std::vector<std::pair<Formula, Formula>> kept;
    for (const auto& pair : d.beta.children()) {
      const Formula& f1 = d.delta1[pair.children()[0].index()];
      const Formula& f2 = d.delta2[pair.children()[1].index()];
      if (f1.kind() == absorbing || f2.kind() == absorbing) continue;
      if (std::find(kept.begin(), kept.end(), std::make_pair(f1, f2)) != kept.end()) continue;
      kept.emplace_back(f1, f2);
      out.delta1.push_back(f1);
      out.delta2.push_back(f2);
    }
    if (kept.empty()) {
      out.beta = mode == Mode::Sigma ? Prop::bot() : Prop::top();
    } else {
      out.beta = pair_beta(kept.size(), mode);
    }
    return out;
  }
  Prop folded = fold_prop(d.beta, d.delta1, d.delta2);
  std::set<std::pair<std::size_t, int>> used;
  collect_used(folded, used);
  std::map<std::pair<std::size_t, int>, std::size_t> m;
  out.delta1.clear();
  out.delta2.clear();
  for (const auto& [idx, side] : used) {
    auto& target = side == 1 ? out.delta1 : out.delta2;
    m[{idx, side}] = target.size();
    target.push_back((side == 1 ? d.delta1 : d.delta2)[idx]);
  }
  out.beta = reindex(folded, m);
  return out;
}

}  // namespace fvkit
