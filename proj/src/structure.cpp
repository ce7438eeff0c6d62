#include "fvkit/structure.hpp"

#include <algorithm>
#include <random>

#include "fvkit/errors.hpp"

namespace fvkit {

namespace {

constexpr std::uint64_t kMaxTable = 1ULL << 26;

std::uint64_t table_size(int n, int arity) {
  std::uint64_t s = 1;
  for (int i = 0; i < arity; ++i) {
    s *= static_cast<std::uint64_t>(n);
    if (s > kMaxTable) throw InputError("structure too large for a dense relation table");
  }
  return s;
}

}  // namespace

Structure::Structure(Vocabulary vocab, std::vector<std::string> universe,
                     const std::map<std::string, std::set<Tuple>>& relations)
    : vocab_(std::move(vocab)), universe_(std::move(universe)) {
  validate_vocabulary(vocab_);
  if (universe_.empty()) throw InputError("structure universe must be nonempty");
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (!index_.emplace(universe_[i], static_cast<int>(i)).second)
      throw InputError("duplicate element id '" + universe_[i] + "'");
  for (const auto& [name, tuples] : relations)
    if (!vocab_.count(name)) throw InputError("relation '" + name + "' not in vocabulary");
  const int n = size();
  for (const auto& [name, arity] : vocab_) {
    auto& bits = tables_[name];
    bits.assign(table_size(n, arity), 0);
    auto it = relations.find(name);
    if (it == relations.end()) continue;
    for (const auto& t : it->second) {
      if (static_cast<int>(t.size()) != arity)
        throw InputError("tuple of wrong length in relation '" + name + "'");
      std::uint64_t idx = 0;
      for (const auto& e : t) {
        auto f = index_.find(e);
        if (f == index_.end())
          throw InputError("element '" + e + "' of relation '" + name + "' not in universe");
        idx = idx * n + f->second;
      }
      bits[idx] = 1;
    }
  }
}

int Structure::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("element '" + id + "' not in universe");
  return it->second;
}

const std::vector<std::uint8_t>& Structure::table(const std::string& rel) const {
  auto it = tables_.find(rel);
  if (it == tables_.end()) throw InputError("relation '" + rel + "' not in vocabulary");
  return it->second;
}

bool Structure::holds(const std::string& rel, const int* args) const {
  const auto& bits = table(rel);
  const int arity = vocab_.at(rel);
  std::uint64_t idx = 0;
  for (int i = 0; i < arity; ++i) idx = idx * universe_.size() + args[i];
  return bits[idx] != 0;
}

std::set<Tuple> Structure::tuples(const std::string& rel) const {
  const auto& bits = table(rel);
  const int arity = vocab_.at(rel);
  std::set<Tuple> out;
  const std::uint64_t n = universe_.size();
  for (std::uint64_t idx = 0; idx < bits.size(); ++idx) {
    if (!bits[idx]) continue;
    Tuple t(arity);
    std::uint64_t rest = idx;
    for (int i = arity - 1; i >= 0; --i) {
      t[i] = universe_[rest % n];
      rest /= n;
    }
    out.insert(std::move(t));
  }
  return out;
}

std::map<std::string, std::set<Tuple>> Structure::relations() const {
  std::map<std::string, std::set<Tuple>> out;
  for (const auto& [name, arity] : vocab_) out[name] = tuples(name);
  return out;
}

bool Structure::operator==(const Structure& o) const {
  return vocab_ == o.vocab_ && universe_ == o.universe_ && tables_ == o.tables_;
}

Structure annotated_disjoint_union(const Structure& a, const Structure& b) {
  if (a.vocab() != b.vocab()) throw InputError("vocabulary mismatch in disjoint union");
  if (a.vocab().count(kMarker)) throw InputError("marker predicate P already in vocabulary");
  Vocabulary v = a.vocab();
  v[kMarker] = 1;
  std::vector<std::string> universe;
  for (const auto& e : a.universe()) universe.push_back("L:" + e);
  for (const auto& e : b.universe()) universe.push_back("R:" + e);
  std::map<std::string, std::set<Tuple>> rels;
  for (const auto& [name, arity] : a.vocab()) {
    auto& out = rels[name];
    for (auto t : a.tuples(name)) {
      for (auto& e : t) e = "L:" + e;
      out.insert(std::move(t));
    }
    for (auto t : b.tuples(name)) {
      for (auto& e : t) e = "R:" + e;
      out.insert(std::move(t));
    }
  }
  for (const auto& e : a.universe()) rels[kMarker].insert({"L:" + e});
  return Structure(std::move(v), std::move(universe), rels);
}

Structure reduct(const Structure& s, const Vocabulary& vocab) {
  std::map<std::string, std::set<Tuple>> rels;
  for (const auto& [name, arity] : vocab) {
    auto it = s.vocab().find(name);
    if (it == s.vocab().end() || it->second != arity)
      throw InputError("reduct vocabulary is not contained in the structure's");
    rels[name] = s.tuples(name);
  }
  return Structure(vocab, s.universe(), rels);
}

Structure rename_elements(const Structure& s, const std::map<std::string, std::string>& m) {
  auto image = [&](const std::string& e) {
    auto it = m.find(e);
    if (it == m.end()) throw InputError("renaming misses element '" + e + "'");
    return it->second;
  };
  std::vector<std::string> universe;
  for (const auto& e : s.universe()) universe.push_back(image(e));
  std::map<std::string, std::set<Tuple>> rels;
  for (const auto& [name, arity] : s.vocab())
    for (auto t : s.tuples(name)) {
      for (auto& e : t) e = image(e);
      rels[name].insert(std::move(t));
    }
  return Structure(s.vocab(), std::move(universe), rels);
}

bool is_partial_isomorphism(const Structure& a, const std::vector<int>& ta, const Structure& b,
                            const std::vector<int>& tb) {
  if (ta.size() != tb.size()) throw InputError("tuple length mismatch");
  if (a.vocab() != b.vocab()) throw InputError("vocabulary mismatch");
  const std::size_t len = ta.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if ((ta[i] == ta[j]) != (tb[i] == tb[j])) return false;
  std::vector<int> pos, xa, xb;
  for (const auto& [name, arity] : a.vocab()) {
    if (len == 0) break;
    pos.assign(arity, 0);
    xa.resize(arity);
    xb.resize(arity);
    for (;;) {
      for (int i = 0; i < arity; ++i) {
        xa[i] = ta[pos[i]];
        xb[i] = tb[pos[i]];
      }
      if (a.holds(name, xa) != b.holds(name, xb)) return false;
      int i = arity - 1;
      while (i >= 0 && ++pos[i] == static_cast<int>(len)) pos[i--] = 0;
      if (i < 0) break;
    }
  }
  return true;
}

bool is_partial_isomorphism(const Structure& a, const Tuple& ta, const Structure& b,
                            const Tuple& tb) {
  if (ta.size() != tb.size()) throw InputError("tuple length mismatch");
  std::vector<int> ia, ib;
  for (const auto& e : ta) ia.push_back(a.index_of(e));
  for (const auto& e : tb) ib.push_back(b.index_of(e));
  return is_partial_isomorphism(a, ia, b, ib);
}

std::vector<std::vector<int>> all_index_tuples(int universe_size, int length) {
  std::vector<std::vector<int>> out;
  if (length > 0 && universe_size <= 0) return out;
  std::vector<int> cur(length, 0);
  for (;;) {
    out.push_back(cur);
    int i = length - 1;
    while (i >= 0 && ++cur[i] == universe_size) cur[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<Structure> all_structures(const Vocabulary& vocab, int max_size) {
  constexpr std::uint64_t kLimit = 1u << 20;
  std::vector<Structure> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::string> universe;
    for (int i = 0; i < n; ++i) universe.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::vector<Tuple>>> slots;
    std::uint64_t bits = 0;
    for (const auto& [name, arity] : vocab) {
      std::vector<Tuple> ts;
      for (const auto& t : all_index_tuples(n, arity)) {
        Tuple tt;
        for (int e : t) tt.push_back(universe[e]);
        ts.push_back(std::move(tt));
      }
      bits += ts.size();
      slots.emplace_back(name, std::move(ts));
    }
    if (bits >= 20 || out.size() + (1ULL << bits) > kLimit)
      throw CapExceeded("too many structures to enumerate exhaustively");
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
      std::map<std::string, std::set<Tuple>> rels;
      std::uint64_t bit = 0;
      for (const auto& [name, ts] : slots) {
        auto& r = rels[name];
        for (const auto& t : ts)
          if (mask >> bit++ & 1) r.insert(t);
      }
      out.emplace_back(vocab, universe, rels);
    }
  }
  return out;
}

Structure random_structure(const Vocabulary& vocab, int size, std::uint64_t seed,
                           int density_percent) {
  if (size < 1) throw InputError("structure size must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::string> universe;
  for (int i = 0; i < size; ++i) universe.push_back(std::to_string(i));
  std::map<std::string, std::set<Tuple>> rels;
  for (const auto& [name, arity] : vocab) {
    auto& r = rels[name];
    for (const auto& t : all_index_tuples(size, arity)) {
      if (static_cast<int>(rng() % 100) >= density_percent) continue;
      Tuple tt;
      for (int e : t) tt.push_back(universe[e]);
      r.insert(std::move(tt));
    }
  }
  return Structure(vocab, std::move(universe), rels);
}

}  // namespace fvkit
