#pragma once

#include <string>

#include "json.hpp"

#include "fvkit/decompose.hpp"
#include "fvkit/formula.hpp"
#include "fvkit/interp.hpp"
#include "fvkit/structure.hpp"

namespace fvkit {

using Json = nlohmann::ordered_json;

// Reads a file if the argument names one, otherwise parses it as JSON text.
Json load_json(const std::string& text_or_path);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Vocabulary vocab_from_json(const Json& j);
Json vocab_to_json(const Vocabulary& v);

Structure structure_from_json(const Json& j);
Json structure_to_json(const Structure& s);

Interpretation interp_from_json(const Json& j);
Json interp_to_json(const Interpretation& xi);

Assignment assignment_from_json(const Json& j);

Json prop_to_json(const Prop& p);
Prop prop_from_json(const Json& j);

Json reduction_to_json(const ReductionSequence& d);
ReductionSequence reduction_from_json(const Json& j);

}  // namespace fvkit
