#include <set>
#include <unordered_map>

#include "fvkit/formula.hpp"

namespace fvkit {

namespace {

class LevelOracle {
 public:
  bool sigma(const Formula& f, int level) { return lookup(f, level, true); }
  bool pi(const Formula& f, int level) { return lookup(f, level, false); }

 private:
  struct Key {
    const void* node;
    int level;
    bool sigma;
    bool operator==(const Key& o) const {
      return node == o.node && level == o.level && sigma == o.sigma;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<const void*>{}(k.node) ^ (static_cast<std::size_t>(k.level) << 1) ^
             static_cast<std::size_t>(k.sigma);
    }
  };

  bool lookup(const Formula& f, int level, bool sigma) {
    if (f.quantifier_free()) return true;
    if (level <= 0) return false;
    Key key{f.identity(), level, sigma};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = sigma ? compute_sigma(f, level) : compute_pi(f, level);
    memo_.emplace(key, r);
    return r;
  }

  bool compute_sigma(const Formula& f, int level) {
    switch (f.kind()) {
      case NodeKind::Exists:
        return sigma(f.body(), level);
      case NodeKind::And:
        for (const auto& c : f.children())
          if (!pi(c, level - 1)) return false;
        return true;
      default:
        return pi(f, level - 1);
    }
  }

  bool compute_pi(const Formula& f, int level) {
    switch (f.kind()) {
      case NodeKind::Forall:
        return pi(f.body(), level);
      case NodeKind::Or:
        for (const auto& c : f.children())
          if (!sigma(c, level - 1)) return false;
        return true;
      default:
        return sigma(f, level - 1);
    }
  }

  std::unordered_map<Key, bool, KeyHash> memo_;
};

void collect_blocks(const Formula& f, NodeKind run_kind, int run_len, std::set<int>& out) {
  if (f.is_quantifier()) {
    if (run_len > 0 && run_kind == f.kind()) {
      collect_blocks(f.body(), run_kind, run_len + 1, out);
    } else {
      if (run_len > 0) out.insert(run_len);
      collect_blocks(f.body(), f.kind(), 1, out);
    }
    return;
  }
  if (run_len > 0) out.insert(run_len);
  for (const auto& c : f.children()) collect_blocks(c, NodeKind::Top, 0, out);
}

int minimal_level(LevelOracle& o, const Formula& f, bool sigma) {
  for (int level = 0;; ++level)
    if (sigma ? o.sigma(f, level) : o.pi(f, level)) return level;
}

}  // namespace

bool in_sigma(const Formula& f, int level) {
  LevelOracle o;
  return o.sigma(f, level);
}

bool in_pi(const Formula& f, int level) {
  LevelOracle o;
  return o.pi(f, level);
}

std::optional<int> block_uniform_k(const Formula& f) {
  std::set<int> lengths;
  collect_blocks(f, NodeKind::Top, 0, lengths);
  if (lengths.size() != 1) return std::nullopt;
  return *lengths.begin();
}

Classification classify(const Formula& f) {
  LevelOracle o;
  Classification c;
  c.sigma_level = minimal_level(o, f, true);
  c.pi_level = minimal_level(o, f, false);
  c.rank = quantifier_rank(f);
  c.block_uniform_k = block_uniform_k(f);
  return c;
}

}  // namespace fvkit
