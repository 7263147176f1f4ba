#include "neron/json_io.hpp"

#include <fstream>
#include <sstream>

#include "neron/error.hpp"

namespace neron {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json load_json(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    text = text_or_path;
  } else {
    std::ifstream in(text_or_path);
    if (!in) throw Error(ErrorCode::kMalformedInput, "cannot open " + text_or_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return guarded("invalid JSON", [&] { return Json::parse(text); });
}

MultiGraph graph_from_json(const Json& doc) {
  return guarded("graph", [&] {
    std::vector<std::string> ids;
    for (const Json& v : doc.at("vertices")) {
      ids.push_back(v.is_string() ? v.get<std::string>() : v.at("id").get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Json& e : doc.value("edges", Json::array())) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kMalformedInput, "edges must be pairs of vertex ids");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return MultiGraph(std::move(ids), edges);
  });
}

MarkedGraph marked_graph_from_json(const Json& doc, StabilityCheck check) {
  MultiGraph graph = graph_from_json(doc);
  return guarded("marked graph", [&] {
    std::vector<long> genera;
    for (const Json& v : doc.at("vertices")) {
      genera.push_back(v.is_object() ? v.value("genus", 0L) : 0L);
    }
    std::vector<Mark> marks;
    for (const Json& mark : doc.value("marks", Json::array())) {
      marks.push_back({mark.at("id").get<std::string>(), mark.at("vertex").get<std::string>(),
                       mark.at("d").get<long>()});
    }
    return MarkedGraph(std::move(graph), std::move(genera), std::move(marks),
                       doc.value("m", 0L), check);
  });
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw Error(ErrorCode::kMalformedInput, "expected a rational as \"p/q\" or an integer");
}

Divisor divisor_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kMalformedInput, "divisor must be an object");
  Divisor d;
  for (const auto& [vertex, value] : doc.items()) d.add(vertex, rational_from_json(value));
  return d;
}

Complex complex_from_json(const Json& value) {
  return guarded("complex", [&] {
    if (value.is_number()) return Complex(value.get<double>(), 0);
    if (value.is_array() && value.size() == 2) {
      return Complex(value[0].get<double>(), value[1].get<double>());
    }
    throw Error(ErrorCode::kMalformedInput, "complex numbers are [re, im] or numbers");
  });
}

CVector cvector_from_json(const Json& value) {
  if (!value.is_array()) throw Error(ErrorCode::kMalformedInput, "expected an array");
  CVector out(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = complex_from_json(value[i]);
  }
  return out;
}

CMatrix cmatrix_from_json(const Json& value) {
  if (!value.is_array() || value.empty()) {
    throw Error(ErrorCode::kMalformedInput, "expected a nonempty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(value.size());
  const auto cols = static_cast<Eigen::Index>(value[0].is_array() ? value[0].size() : 0);
  CMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = value[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorCode::kMalformedInput, "matrix rows must have equal length");
    }
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = complex_from_json(row[static_cast<std::size_t>(j)]);
  }
  return out;
}

OrderedJson divisor_to_json(const Divisor& d, const MultiGraph& graph) {
  const auto values = d.on(graph);
  OrderedJson out = OrderedJson::object();
  for (std::size_t v = 0; v < values.size(); ++v) out[graph.vertex_id(v)] = format_rational(values[v]);
  return out;
}

OrderedJson matrix_to_json(const RationalMatrix& m) {
  OrderedJson out = OrderedJson::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(format_rational(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

OrderedJson bridge_type_to_json(const BridgeType& type) {
  return OrderedJson{{"marks", type.marks}, {"h", type.h}};
}

OrderedJson pic_class_to_json(const PicClass& cls) {
  OrderedJson out = OrderedJson::object();
  for (const auto& [symbol, coefficient] : cls.terms()) out[to_string(symbol)] = format_rational(coefficient);
  return out;
}

OrderedJson complex_to_json(Complex value) { return OrderedJson::array({value.real(), value.imag()}); }

}  // namespace neron
