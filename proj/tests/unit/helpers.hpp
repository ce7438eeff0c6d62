#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fvkit/formula.hpp"
#include "fvkit/structure.hpp"

namespace testutil {

inline fvkit::Formula P(const std::string& text, const fvkit::Vocabulary& v) {
  return fvkit::parse_formula(text, v);
}

inline fvkit::Structure make(const fvkit::Vocabulary& v, std::vector<std::string> universe,
                             std::map<std::string, std::set<fvkit::Tuple>> rels = {}) {
  return fvkit::Structure(v, std::move(universe), rels);
}

inline fvkit::Structure linear_order(int n) {
  std::vector<std::string> u;
  std::set<fvkit::Tuple> le;
  for (int i = 0; i < n; ++i) u.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) le.insert({u[i], u[j]});
  return make({{"<=", 2}}, u, {{"<=", le}});
}

inline fvkit::Structure loop() { return make({{"E", 2}}, {"a"}, {{"E", {{"a", "a"}}}}); }
inline fvkit::Structure edgeless() { return make({{"E", 2}}, {"b"}); }

inline fvkit::Structure triangle() {
  std::set<fvkit::Tuple> e;
  for (std::string a : {"0", "1", "2"})
    for (std::string b : {"0", "1", "2"})
      if (a != b) e.insert({a, b});
  return make({{"E", 2}}, {"0", "1", "2"}, {{"E", e}});
}

inline std::string data_path(const std::string& name) {
  return std::string(FVKIT_TEST_DATA) + "/" + name;
}

}  // namespace testutil
