#include "fvkit/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "fvkit/errors.hpp"
#include "fvkit/modelcheck.hpp"

namespace fvkit {

Bits::Bits(std::size_t n, bool value) : n_(n), w_((n + 63) / 64, value ? ~0ULL : 0ULL) { trim(); }

void Bits::trim() {
  if (n_ % 64 && !w_.empty()) w_.back() &= (1ULL << (n_ % 64)) - 1;
}

void Bits::set(std::size_t i, bool v) {
  if (v) w_[i >> 6] |= 1ULL << (i & 63);
  else w_[i >> 6] &= ~(1ULL << (i & 63));
}

Bits& Bits::operator&=(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bits Bits::operator~() const {
  Bits out = *this;
  for (auto& w : out.w_) w = ~w;
  out.trim();
  return out;
}

bool Bits::any() const {
  return std::any_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

std::size_t Bits::hash() const {
  std::size_t h = std::hash<std::size_t>()(n_);
  for (auto w : w_) h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Bits::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < n_; i += 4) {
    int d = 0;
    for (std::size_t j = 0; j < 4; ++j)
      if (i + j < n_ && test(i + j)) d |= 8 >> j;
    out.push_back(digits[d]);
  }
  return out;
}

TestBed::TestBed(std::vector<Structure> structures, std::vector<std::string> context)
    : TestBed(std::make_shared<const std::vector<Structure>>(std::move(structures)),
              std::move(context)) {}

TestBed::TestBed(std::shared_ptr<const std::vector<Structure>> s, std::vector<std::string> context)
    : structures_(std::move(s)), context_(std::move(context)) {
  if (structures_->empty()) throw InputError("test bed needs at least one structure");
  for (const auto& st : *structures_)
    if (st.vocab() != structures_->front().vocab())
      throw InputError("test bed structures must share a vocabulary");
  for (std::size_t i = 0; i < context_.size(); ++i) {
    if (!is_variable_name(context_[i])) throw InputError("bad variable name '" + context_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (context_[i] == context_[j]) throw InputError("repeated context variable");
  }
  index_rows();
}

void TestBed::index_rows() {
  offsets_.clear();
  rows_ = 0;
  for (const auto& st : *structures_) {
    offsets_.push_back(rows_);
    std::size_t r = 1;
    for (std::size_t i = 0; i < context_.size(); ++i) {
      r *= static_cast<std::size_t>(st.size());
      if (r > (1u << 26)) throw CapExceeded("test bed has too many rows");
    }
    rows_ += r;
  }
}

std::size_t TestBed::row_index(std::size_t structure, const std::vector<int>& values) const {
  if (values.size() != context_.size()) throw InputError("assignment length mismatch");
  const std::size_t n = static_cast<std::size_t>((*structures_)[structure].size());
  std::size_t idx = 0;
  for (int v : values) idx = idx * n + static_cast<std::size_t>(v);
  return offsets_[structure] + idx;
}

TestBed TestBed::extended(const std::vector<std::string>& extra) const {
  auto ctx = context_;
  ctx.insert(ctx.end(), extra.begin(), extra.end());
  return TestBed(structures_, std::move(ctx));
}

Bits bits_of(const Formula& f, const TestBed& bed) {
  Bits out(bed.row_count());
  const auto len = static_cast<int>(bed.context().size());
  for (std::size_t s = 0; s < bed.structures().size(); ++s) {
    const Structure& st = bed.structures()[s];
    CompiledFormula cf(f, st, bed.context());
    std::size_t r = bed.offset(s);
    for (const auto& t : all_index_tuples(st.size(), len)) out.set(r++, cf.eval(t));
  }
  return out;
}

std::vector<std::string> fresh_block(const std::vector<std::string>& context, int k) {
  std::vector<std::string> out;
  for (std::size_t i = context.size() + 1; static_cast<int>(out.size()) < k; ++i) {
    std::string name = "y" + std::to_string(i);
    if (std::find(context.begin(), context.end(), name) == context.end()) out.push_back(name);
  }
  return out;
}

namespace {

// Existential (union) or universal (intersection) projection of the last k
// context variables.
Bits project(const Bits& ext, const TestBed& bed, int k, bool existential) {
  Bits out(bed.row_count());
  const auto c = bed.context().size();
  for (std::size_t s = 0; s < bed.structures().size(); ++s) {
    std::size_t n = static_cast<std::size_t>(bed.structures()[s].size());
    std::size_t base_rows = 1, block = 1;
    for (std::size_t i = 0; i < c; ++i) base_rows *= n;
    for (int i = 0; i < k; ++i) block *= n;
    // Rows of the extended bed for structure s start at the sum of the
    // earlier structures' extended row counts.
    std::size_t ext_off = 0;
    for (std::size_t p = 0; p < s; ++p) {
      std::size_t m = 1;
      for (std::size_t i = 0; i < c + static_cast<std::size_t>(k); ++i)
        m *= static_cast<std::size_t>(bed.structures()[p].size());
      ext_off += m;
    }
    for (std::size_t a = 0; a < base_rows; ++a) {
      bool v = !existential;
      for (std::size_t b = 0; b < block; ++b) {
        if (ext.test(ext_off + a * block + b) == existential) {
          v = existential;
          break;
        }
      }
      out.set(bed.offset(s) + a, v);
    }
  }
  return out;
}

Formula prefix_block(NodeKind q, const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::quantifier(q, *it, body);
  return body;
}

struct Atoms {
  std::vector<Bits> atoms;
  std::vector<Formula> reps;
  std::vector<std::size_t> of_row;
  std::vector<SemanticClass> literals;
};

Atoms qf_atoms(const TestBed& bed, const EnumerationCaps& caps) {
  if (bed.row_count() > caps.max_rows) throw CapExceeded("test bed exceeds the row cap");
  const auto& ctx = bed.context();
  const int c = static_cast<int>(ctx.size());
  Atoms out;
  for (const auto& [rel, arity] : bed.vocab())
    for (const auto& t : all_index_tuples(c, arity)) {
      std::vector<std::string> args;
      for (int i : t) args.push_back(ctx[i]);
      Formula lit = Formula::literal(true, rel, args);
      out.literals.push_back({bits_of(lit, bed), lit});
    }
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      Formula lit = Formula::equality(true, ctx[i], ctx[j]);
      out.literals.push_back({bits_of(lit, bed), lit});
    }

  std::unordered_map<std::string, std::size_t> by_type;
  out.of_row.resize(bed.row_count());
  for (std::size_t r = 0; r < bed.row_count(); ++r) {
    std::string type;
    for (const auto& l : out.literals) type.push_back(l.bits.test(r) ? '1' : '0');
    auto [it, fresh] = by_type.emplace(type, out.atoms.size());
    if (fresh) {
      out.atoms.emplace_back(bed.row_count());
      std::vector<Formula> parts;
      for (std::size_t i = 0; i < out.literals.size(); ++i) {
        const Formula& l = out.literals[i].representative;
        parts.push_back(type[i] == '1' ? l : negate_dual(l));
      }
      out.reps.push_back(Formula::conj(std::move(parts)));
    }
    out.atoms[it->second].set(r);
    out.of_row[r] = it->second;
  }
  return out;
}

class ClassSet {
 public:
  bool add(const Bits& b, const Formula& rep) {
    if (index_.count(b)) return false;
    index_.emplace(b, classes_.size());
    classes_.push_back({b, rep});
    return true;
  }
  std::size_t size() const { return classes_.size(); }
  const SemanticClass& operator[](std::size_t i) const { return classes_[i]; }
  std::vector<SemanticClass> take() { return std::move(classes_); }

 private:
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
  std::vector<SemanticClass> classes_;
};

std::vector<SemanticClass> qf_classes(const TestBed& bed, const EnumerationCaps& caps) {
  Atoms at = qf_atoms(bed, caps);
  const std::size_t a = at.atoms.size();
  if (a >= 63 || (1ULL << a) > caps.max_classes)
    throw CapExceeded("quantifier-free class count exceeds the cap");
  ClassSet out;
  out.add(Bits(bed.row_count(), true), Formula::top());
  out.add(Bits(bed.row_count(), false), Formula::bot());
  for (const auto& l : at.literals) {
    out.add(l.bits, l.representative);
    out.add(~l.bits, negate_dual(l.representative));
  }
  for (std::uint64_t mask = 0; mask < (1ULL << a); ++mask) {
    Bits b(bed.row_count());
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < a; ++i)
      if (mask >> i & 1U) {
        b |= at.atoms[i];
        parts.push_back(at.reps[i]);
      }
    out.add(b, Formula::disj(std::move(parts)));
  }
  return out.take();
}

// Closure of gens under intersection (And) or union (Or).
std::vector<SemanticClass> close_under(std::vector<SemanticClass> gens, NodeKind op,
                                       const EnumerationCaps& caps) {
  ClassSet all;
  std::vector<std::size_t> frontier;
  std::vector<SemanticClass> unique_gens;
  for (auto& g : gens)
    if (all.add(g.bits, g.representative)) {
      frontier.push_back(all.size() - 1);
      unique_gens.push_back(g);
    }
  std::uint64_t iters = 0;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      for (const auto& g : unique_gens) {
        if (++iters > caps.max_iters) throw CapExceeded("closure iteration cap exceeded");
        const SemanticClass cur = all[i];
        Bits b = op == NodeKind::And ? (cur.bits & g.bits) : (cur.bits | g.bits);
        std::vector<Formula> parts;
        if (cur.representative.kind() == op) parts = cur.representative.children();
        else parts.push_back(cur.representative);
        parts.push_back(g.representative);
        if (all.add(b, Formula::connective(op, std::move(parts)))) {
          next.push_back(all.size() - 1);
          if (all.size() > caps.max_classes) throw CapExceeded("class count exceeds the cap");
        }
      }
    }
    frontier = std::move(next);
  }
  return all.take();
}

Mode dual(Mode m) { return m == Mode::Sigma ? Mode::Pi : Mode::Sigma; }

}  // namespace

std::vector<SemanticClass> enumerate_classes(Mode mode, int n, int k, const TestBed& bed,
                                             const EnumerationCaps& caps) {
  if (n < 0) throw InputError("level must be non-negative");
  if (n == 0) return qf_classes(bed, caps);
  if (k < 1) throw InputError("block length must be at least 1");
  const auto names = fresh_block(bed.context(), k);
  const TestBed ext = bed.extended(names);
  if (ext.row_count() > caps.max_rows) throw CapExceeded("test bed exceeds the row cap");
  const bool sigma = mode == Mode::Sigma;
  auto inner = enumerate_classes(dual(mode), n - 1, k, ext, caps);
  if (n - 1 > 0) inner = close_under(std::move(inner), sigma ? NodeKind::And : NodeKind::Or, caps);
  ClassSet out;
  const NodeKind q = sigma ? NodeKind::Exists : NodeKind::Forall;
  for (const auto& c : inner)
    out.add(project(c.bits, bed, k, sigma), prefix_block(q, names, c.representative));
  return out.take();
}

std::vector<SemanticClass> enumerate_ranked(Mode mode, int n, int m, const TestBed& bed,
                                            const EnumerationCaps& caps) {
  if (n < 0 || m < 0) throw InputError("level and rank must be non-negative");
  if (n == 0 || m == 0) return qf_classes(bed, caps);
  const bool sigma = mode == Mode::Sigma;
  const NodeKind q = sigma ? NodeKind::Exists : NodeKind::Forall;
  ClassSet out;
  for (int j = 0; j <= m; ++j) {
    const auto names = fresh_block(bed.context(), j);
    const TestBed ext = bed.extended(names);
    if (ext.row_count() > caps.max_rows) throw CapExceeded("test bed exceeds the row cap");
    auto inner = enumerate_ranked(dual(mode), n - 1, m - j, ext, caps);
    if (n - 1 > 0 && m - j > 0)
      inner = close_under(std::move(inner), sigma ? NodeKind::And : NodeKind::Or, caps);
    for (const auto& c : inner) {
      if (j == 0) out.add(c.bits, c.representative);
      else out.add(project(c.bits, bed, j, sigma), prefix_block(q, names, c.representative));
      if (out.size() > caps.max_classes) throw CapExceeded("class count exceeds the cap");
    }
  }
  return out.take();
}

namespace {

// Generators of the existential (n,k) classes: every class is a union of
// these. basic(e) is the projection of the smallest intersection of
// complemented lower generators that still contains extension row e.
struct Basic {
  Bits bits;
  Formula rep;
};

class BasisBuilder {
 public:
  BasisBuilder(int k, bool with_reps, const EnumerationCaps& caps)
      : k_(k), reps_(with_reps), caps_(caps) {}

  std::vector<Basic> basics(int n, const TestBed& bed) {
    if (bed.row_count() > caps_.max_rows) throw CapExceeded("test bed exceeds the row cap");
    if (n == 0) {
      Atoms at = qf_atoms(bed, caps_);
      std::vector<Basic> out;
      for (std::size_t i = 0; i < at.atoms.size(); ++i) out.push_back({at.atoms[i], at.reps[i]});
      return out;
    }
    const auto names = fresh_block(bed.context(), k_);
    const TestBed ext = bed.extended(names);
    const auto lower = basics(n - 1, ext);
    std::vector<Basic> out;
    std::unordered_map<Bits, std::size_t, BitsHash> seen;
    for (std::size_t e = 0; e < ext.row_count(); ++e) {
      Bits t(ext.row_count(), true);
      for (const auto& b : lower)
        if (!b.bits.test(e)) t &= ~b.bits;
      Bits proj = project(t, bed, k_, true);
      if (seen.count(proj)) continue;
      seen.emplace(proj, out.size());
      Formula rep = Formula::top();
      if (reps_) rep = prefix_block(NodeKind::Exists, names, body_for(n, lower, e, t));
      out.push_back({std::move(proj), std::move(rep)});
    }
    return out;
  }

 private:
  // A conjunction of complemented lower generators with truth set exactly t.
  Formula body_for(int n, const std::vector<Basic>& lower, std::size_t e, const Bits& t) {
    if (n == 1) {
      for (const auto& b : lower)
        if (b.bits.test(e)) return b.rep;
    }
    Bits missing = ~t;
    std::vector<Formula> parts;
    while (missing.any()) {
      std::size_t best = lower.size(), best_gain = 0;
      for (std::size_t i = 0; i < lower.size(); ++i) {
        if (lower[i].bits.test(e)) continue;
        std::size_t gain = (lower[i].bits & missing).count();
        if (gain > best_gain) {
          best = i;
          best_gain = gain;
        }
      }
      if (best == lower.size()) throw std::logic_error("generator cover failed");
      parts.push_back(negate_dual(lower[best].rep));
      missing &= ~lower[best].bits;
    }
    return Formula::conj(std::move(parts));
  }

  int k_;
  bool reps_;
  const EnumerationCaps& caps_;
};

std::vector<std::string> context_names(std::size_t len) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= len; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<int> tuple_indices(const Structure& s, const Tuple& t) {
  std::vector<int> out;
  for (const auto& e : t) out.push_back(s.index_of(e));
  return out;
}

}  // namespace

bool transfer_oracle(int n, int k, const Structure& a1, const Tuple& t1, const Structure& a2,
                     const Tuple& t2, const EnumerationCaps& caps) {
  if (t1.size() != t2.size()) throw InputError("tuple lengths differ");
  if (a1.vocab() != a2.vocab()) throw InputError("structures have different vocabularies");
  if (n < 0 || (n > 0 && k < 1)) throw InputError("bad game parameters");
  TestBed bed({a1, a2}, context_names(t1.size()));
  const std::size_t r1 = bed.row_index(0, tuple_indices(a1, t1));
  const std::size_t r2 = bed.row_index(1, tuple_indices(a2, t2));
  BasisBuilder builder(k, false, caps);
  for (const auto& b : builder.basics(n, bed))
    if (b.bits.test(r1) && !b.bits.test(r2)) return false;
  return true;
}

SeparatorResult find_separator(int n, int k, const Structure& a1, const Structure& a2,
                               const SeparatorBudget& budget) {
  if (a1.vocab() != a2.vocab()) throw InputError("structures have different vocabularies");
  if (n < 1 || k < 1) throw InputError("separator search needs n >= 1 and k >= 1");
  TestBed bed({a1, a2}, {});
  const auto names = fresh_block({}, k);
  const TestBed ext = bed.extended(names);
  BasisBuilder builder(k, true, budget.caps);
  const auto lower = builder.basics(n - 1, ext);

  const std::size_t first2 = ext.offset(1), rows = ext.row_count();
  auto covers_all = [&](const std::vector<std::size_t>& pick) {
    for (std::size_t r = first2; r < rows; ++r) {
      bool hit = false;
      for (std::size_t i : pick) hit = hit || lower[i].bits.test(r);
      if (!hit) return false;
    }
    return true;
  };

  // Candidates per extension row of a1: lower generators excluding it and
  // catching at least one extension row of a2.
  std::vector<std::vector<std::size_t>> cands(first2);
  bool separable = false;
  for (std::size_t e = 0; e < first2; ++e) {
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (lower[i].bits.test(e)) continue;
      bool useful = false;
      for (std::size_t r = first2; r < rows && !useful; ++r) useful = lower[i].bits.test(r);
      if (useful) cands[e].push_back(i);
    }
    separable = separable || covers_all(cands[e]);
  }
  SeparatorResult res;
  if (!separable) {
    res.status = SeparatorStatus::NoSeparator;
    return res;
  }

  std::uint64_t tried = 0;
  for (int w = 1; w <= budget.max_width; ++w) {
    for (std::size_t e = 0; e < first2; ++e) {
      const auto& c = cands[e];
      if (c.size() < static_cast<std::size_t>(w)) continue;
      std::vector<std::size_t> sel(w);
      for (int i = 0; i < w; ++i) sel[i] = static_cast<std::size_t>(i);
      while (true) {
        if (++tried > budget.max_candidates) return res;
        std::vector<std::size_t> pick;
        for (auto s : sel) pick.push_back(c[s]);
        if (covers_all(pick)) {
          std::vector<Formula> parts;
          for (auto i : pick) parts.push_back(negate_dual(lower[i].rep));
          Formula f = prefix_block(NodeKind::Exists, names, Formula::conj(std::move(parts)));
          if (!eval(a1, f, {}) || eval(a2, f, {}))
            throw std::logic_error("separator candidate failed the model check");
          res.status = SeparatorStatus::Found;
          res.sentence = f;
          return res;
        }
        int i = w - 1;
        while (i >= 0 && sel[i] == c.size() - static_cast<std::size_t>(w - i)) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < w; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
  }
  return res;
}

std::string CountResult::bound_text() const { return tower_string(bound_level, bound_base); }

CountResult count_bound_check(int n, int m, int t, const Vocabulary& vocab, const TestBed& bed,
                              const EnumerationCaps& caps) {
  if (static_cast<int>(bed.context().size()) != t)
    throw InputError("test bed context length must equal t");
  if (bed.vocab() != vocab) throw InputError("test bed vocabulary mismatch");
  CountResult res;
  res.count = enumerate_ranked(Mode::Sigma, n, m, bed, caps).size();
  const int p = max_arity(vocab);
  BigInt power = 1;
  for (int i = 0; i < p; ++i) power *= BigInt(m + t);
  res.bound_level = n + 2;
  res.bound_base = BigInt(static_cast<long>(vocab.size()) + 1) * (n + 1) * power;
  res.ok = tower_at_least(res.bound_level, res.bound_base, BigInt(res.count));
  return res;
}

}  // namespace fvkit
