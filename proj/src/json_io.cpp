#include "fvkit/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fvkit/errors.hpp"

namespace fvkit {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json load_json(const std::string& text_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(text_or_path, ec)) return read_json_file(text_or_path);
  try {
    return Json::parse(text_or_path);
  } catch (const Json::exception&) {
    throw InputError("'" + text_or_path + "' is neither a readable file nor JSON text");
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Vocabulary vocab_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("vocabulary must be a JSON object");
  Vocabulary v;
  for (const auto& [name, arity] : j.items()) {
    if (!arity.is_number_integer()) throw InputError("arity of '" + name + "' must be an integer");
    v[name] = arity.get<int>();
  }
  validate_vocabulary(v);
  return v;
}

Json vocab_to_json(const Vocabulary& v) {
  Json j = Json::object();
  for (const auto& [name, arity] : v) j[name] = arity;
  return j;
}

Structure structure_from_json(const Json& j) {
  return guarded("structure", [&] {
    if (!j.is_object()) throw InputError("structure must be a JSON object");
    Vocabulary vocab = vocab_from_json(j.at("vocabulary"));
    auto universe = strings(j.at("universe"), "universe");
    std::map<std::string, std::set<Tuple>> rels;
    if (j.contains("relations")) {
      for (const auto& [name, tuples] : j.at("relations").items()) {
        if (!tuples.is_array()) throw InputError("relation '" + name + "' must be an array");
        auto& set = rels[name];
        for (const auto& t : tuples) set.insert(strings(t, "tuple"));
      }
    }
    return Structure(std::move(vocab), std::move(universe), rels);
  });
}

Json structure_to_json(const Structure& s) {
  Json j;
  j["vocabulary"] = vocab_to_json(s.vocab());
  j["universe"] = s.universe();
  Json rels = Json::object();
  for (const auto& [name, tuples] : s.relations()) {
    Json arr = Json::array();
    for (const auto& t : tuples) arr.push_back(t);
    rels[name] = std::move(arr);
  }
  j["relations"] = std::move(rels);
  return j;
}

Interpretation interp_from_json(const Json& j) {
  return guarded("interpretation", [&] {
    Interpretation xi;
    xi.source_vocab = vocab_from_json(j.at("source_vocabulary"));
    xi.target_vocab = vocab_from_json(j.at("target_vocabulary"));
    xi.universe_formula = parse_formula(j.at("universe_formula").get<std::string>(), xi.source_vocab);
    for (const auto& [name, text] : j.at("relation_formulas").items())
      xi.relation_formulas[name] = parse_formula(text.get<std::string>(), xi.source_vocab);
    validate_interpretation(xi);
    return xi;
  });
}

Json interp_to_json(const Interpretation& xi) {
  Json j;
  j["source_vocabulary"] = vocab_to_json(xi.source_vocab);
  j["target_vocabulary"] = vocab_to_json(xi.target_vocab);
  j["universe_formula"] = print_formula(xi.universe_formula);
  Json rels = Json::object();
  for (const auto& [name, f] : xi.relation_formulas) rels[name] = print_formula(f);
  j["relation_formulas"] = std::move(rels);
  return j;
}

Assignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("assignment must be a JSON object");
  Assignment a;
  for (const auto& [var, e] : j.items()) {
    if (!e.is_string()) throw InputError("assignment values must be element ids");
    a[var] = e.get<std::string>();
  }
  return a;
}

Json prop_to_json(const Prop& p) {
  switch (p.kind()) {
    case PropKind::Var:
      return Json{{"var", {p.index(), p.side()}}};
    case PropKind::Top:
      return Json{{"const", true}};
    case PropKind::Bot:
      return Json{{"const", false}};
    default: {
      Json arr = Json::array();
      for (const auto& c : p.children()) arr.push_back(prop_to_json(c));
      return Json{{p.kind() == PropKind::And ? "and" : "or", std::move(arr)}};
    }
  }
}

Prop prop_from_json(const Json& j) {
  return guarded("propositional formula", [&] {
    if (!j.is_object() || j.size() != 1) throw InputError("propositional node must have one key");
    if (j.contains("var")) {
      const auto& v = j.at("var");
      if (!v.is_array() || v.size() != 2) throw InputError("var must be [index, side]");
      return Prop::var(v.at(0).get<std::size_t>(), v.at(1).get<int>());
    }
    if (j.contains("const")) return j.at("const").get<bool>() ? Prop::top() : Prop::bot();
    const bool is_and = j.contains("and");
    if (!is_and && !j.contains("or")) throw InputError("unknown propositional node");
    std::vector<Prop> cs;
    for (const auto& c : j.at(is_and ? "and" : "or")) cs.push_back(prop_from_json(c));
    return is_and ? Prop::conj(std::move(cs)) : Prop::disj(std::move(cs));
  });
}

Json reduction_to_json(const ReductionSequence& d) {
  Json j;
  Json d1 = Json::array(), d2 = Json::array();
  for (const auto& f : d.delta1) d1.push_back(print_formula(f));
  for (const auto& f : d.delta2) d2.push_back(print_formula(f));
  j["delta1"] = std::move(d1);
  j["delta2"] = std::move(d2);
  j["beta"] = prop_to_json(d.beta);
  j["partition"] = {{"left", d.partition.left}, {"right", d.partition.right}};
  j["vocabulary"] = vocab_to_json(d.vocab);
  auto s = reduction_stats(d);
  j["stats"] = {{"total_size", s.total_size},
                {"factor_count_1", s.factor_count_1},
                {"factor_count_2", s.factor_count_2},
                {"beta_size", s.beta_size}};
  return j;
}

ReductionSequence reduction_from_json(const Json& j) {
  return guarded("reduction sequence", [&] {
    ReductionSequence d;
    d.vocab = vocab_from_json(j.at("vocabulary"));
    for (const auto& t : strings(j.at("delta1"), "delta1"))
      d.delta1.push_back(parse_formula(t, d.vocab));
    for (const auto& t : strings(j.at("delta2"), "delta2"))
      d.delta2.push_back(parse_formula(t, d.vocab));
    d.beta = prop_from_json(j.at("beta"));
    d.partition.left = strings(j.at("partition").at("left"), "partition.left");
    d.partition.right = strings(j.at("partition").at("right"), "partition.right");
    check_well_formed(d);
    return d;
  });
}

}  // namespace fvkit
