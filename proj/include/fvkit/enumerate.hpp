#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fvkit/formula.hpp"
#include "fvkit/structure.hpp"
#include "fvkit/tower.hpp"

namespace fvkit {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n, bool value = false);

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v = true);

  Bits& operator&=(const Bits& o);
  Bits& operator|=(const Bits& o);
  Bits operator~() const;
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  bool any() const;
  std::size_t count() const;
  std::size_t hash() const;
  // Row 0 is the high bit of the first hex digit.
  std::string hex() const;

 private:
  void trim();
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

// Rows: structure index major, then assignments to the context in
// lexicographic order of element positions (first variable most significant).
class TestBed {
 public:
  TestBed(std::vector<Structure> structures, std::vector<std::string> context);

  const std::vector<Structure>& structures() const { return *structures_; }
  const std::vector<std::string>& context() const { return context_; }
  const Vocabulary& vocab() const { return structures_->front().vocab(); }

  std::size_t row_count() const { return rows_; }
  std::size_t offset(std::size_t structure) const { return offsets_[structure]; }
  std::size_t row_index(std::size_t structure, const std::vector<int>& values) const;

  // Same structures, context extended by extra variables.
  TestBed extended(const std::vector<std::string>& extra) const;

 private:
  TestBed(std::shared_ptr<const std::vector<Structure>> s, std::vector<std::string> context);
  void index_rows();

  std::shared_ptr<const std::vector<Structure>> structures_;
  std::vector<std::string> context_;
  std::vector<std::size_t> offsets_;
  std::size_t rows_ = 0;
};

struct SemanticClass {
  Bits bits;
  Formula representative;
};

struct EnumerationCaps {
  std::size_t max_classes = 200000;
  std::uint64_t max_iters = 200'000'000;
  std::size_t max_rows = 1u << 22;
};

// Truth bits of f over the bed, by model checking each row.
Bits bits_of(const Formula& f, const TestBed& bed);

// k distinct fresh names y<i> avoiding the context.
std::vector<std::string> fresh_block(const std::vector<std::string>& context, int k);

// Classes of the block-uniform fragment with n alternating k-blocks.
std::vector<SemanticClass> enumerate_classes(Mode mode, int n, int k, const TestBed& bed,
                                             const EnumerationCaps& caps = {});

// Rank-bounded variant: classes of formulas at level n with rank at most m.
std::vector<SemanticClass> enumerate_ranked(Mode mode, int n, int m, const TestBed& bed,
                                            const EnumerationCaps& caps = {});

bool transfer_oracle(int n, int k, const Structure& a1, const Tuple& t1, const Structure& a2,
                     const Tuple& t2, const EnumerationCaps& caps = {});

enum class SeparatorStatus { Found, NoneWithinBudget, NoSeparator };

struct SeparatorBudget {
  int max_width = 4;
  std::uint64_t max_candidates = 5'000'000;
  EnumerationCaps caps;
};

struct SeparatorResult {
  SeparatorStatus status = SeparatorStatus::NoneWithinBudget;
  std::optional<Formula> sentence;
};

// A sentence of the (n,k) block-uniform existential fragment true in a1 and false in a2.
SeparatorResult find_separator(int n, int k, const Structure& a1, const Structure& a2,
                               const SeparatorBudget& budget = {});

struct CountResult {
  std::size_t count = 0;
  int bound_level = 0;
  BigInt bound_base;
  bool ok = false;
  std::string bound_text() const;
};

CountResult count_bound_check(int n, int m, int t, const Vocabulary& vocab, const TestBed& bed,
                              const EnumerationCaps& caps = {});

}  // namespace fvkit
