#pragma once

#include <json.hpp>

#include <string>

#include "neron/decomposition.hpp"
#include "neron/graph.hpp"
#include "neron/moduli.hpp"
#include "neron/rational.hpp"
#include "neron/theta.hpp"

namespace neron {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Parses inline JSON text, or reads the named file when the text does not start
// with '{' or '['. Throws Error(kMalformedInput).
Json load_json(const std::string& text_or_path);

// {"vertices":[{"id":..,"genus":..}], "edges":[[a,b]], "marks":[{"id","vertex","d"}], "m":..}
// "genus", "marks" and "m" are optional (0, none, 0).
MultiGraph graph_from_json(const Json& doc);
MarkedGraph marked_graph_from_json(const Json& doc, StabilityCheck check = StabilityCheck::kNone);

// {"vertex id": "p/q" | integer, ...}
Divisor divisor_from_json(const Json& doc);
Rational rational_from_json(const Json& value);

// Complex numbers are [re, im] or plain numbers.
Complex complex_from_json(const Json& value);
CVector cvector_from_json(const Json& value);
CMatrix cmatrix_from_json(const Json& value);

// Every vertex of the graph in declaration order, zeros included.
OrderedJson divisor_to_json(const Divisor& d, const MultiGraph& graph);
OrderedJson matrix_to_json(const RationalMatrix& m);
OrderedJson bridge_type_to_json(const BridgeType& type);
OrderedJson pic_class_to_json(const PicClass& cls);
OrderedJson complex_to_json(Complex value);

}  // namespace neron
