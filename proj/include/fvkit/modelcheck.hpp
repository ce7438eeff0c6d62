#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fvkit/formula.hpp"
#include "fvkit/structure.hpp"

namespace fvkit {

inline constexpr std::uint64_t kDefaultWorkCap = 10'000'000;

bool eval(const Structure& a, const Formula& f, const Assignment& asg,
          std::uint64_t max_atom_checks = kDefaultWorkCap);

// A formula bound to one structure and an ordered variable context, for
// repeated evaluation under element-position assignments. The structure must
// outlive the compiled form.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const Structure& s, const std::vector<std::string>& context);

  bool eval(const std::vector<int>& values, std::uint64_t max_atom_checks = kDefaultWorkCap) const;

 private:
  struct Op {
    NodeKind kind;
    bool positive = true;
    bool is_equality = false;
    const std::uint8_t* table = nullptr;
    std::vector<int> slots;  // literal arguments, or the bound slot of a quantifier
    std::vector<int> kids;
  };

  int compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope);
  bool run(int op, std::vector<int>& env, std::uint64_t& budget) const;

  const Structure* structure_ = nullptr;
  std::vector<Op> ops_;
  int root_ = 0;
  int slots_ = 0;
  int context_size_ = 0;
  int n_ = 0;
};

}  // namespace fvkit
