#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fvkit/formula.hpp"

namespace fvkit {

using Tuple = std::vector<std::string>;
using Assignment = std::map<std::string, std::string>;

// Finite relational structure with opaque string element ids. Relations are
// kept as dense bit tables indexed by element positions.
class Structure {
 public:
  Structure(Vocabulary vocab, std::vector<std::string> universe,
            const std::map<std::string, std::set<Tuple>>& relations);

  const Vocabulary& vocab() const { return vocab_; }
  const std::vector<std::string>& universe() const { return universe_; }
  int size() const { return static_cast<int>(universe_.size()); }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  int index_of(const std::string& id) const;

  // Membership by element positions; args has the relation's arity.
  bool holds(const std::string& rel, const int* args) const;
  bool holds(const std::string& rel, const std::vector<int>& args) const {
    return holds(rel, args.data());
  }
  const std::vector<std::uint8_t>& table(const std::string& rel) const;

  std::set<Tuple> tuples(const std::string& rel) const;
  std::map<std::string, std::set<Tuple>> relations() const;

  bool operator==(const Structure& o) const;

 private:
  Vocabulary vocab_;
  std::vector<std::string> universe_;
  std::unordered_map<std::string, int> index_;
  std::map<std::string, std::vector<std::uint8_t>> tables_;
};

inline constexpr const char* kMarker = "P";

Structure annotated_disjoint_union(const Structure& a, const Structure& b);
// Restriction of the signature: drops relations outside vocab.
Structure reduct(const Structure& s, const Vocabulary& vocab);
Structure rename_elements(const Structure& s, const std::map<std::string, std::string>& m);

bool is_partial_isomorphism(const Structure& a, const Tuple& ta, const Structure& b,
                            const Tuple& tb);
bool is_partial_isomorphism(const Structure& a, const std::vector<int>& ta, const Structure& b,
                            const std::vector<int>& tb);

// All structures with universes {"0"}, {"0","1"}, ... up to max_size, in a fixed order.
std::vector<Structure> all_structures(const Vocabulary& vocab, int max_size);
// Each tuple present independently with the given probability (percent).
Structure random_structure(const Vocabulary& vocab, int size, std::uint64_t seed,
                           int density_percent = 50);

// Tuples over the universe in lexicographic order of element positions.
std::vector<std::vector<int>> all_index_tuples(int universe_size, int length);

}  // namespace fvkit
