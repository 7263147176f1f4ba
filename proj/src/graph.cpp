#include "neron/graph.hpp"

#include <numeric>
#include <string>

#include "neron/error.hpp"

namespace neron {

namespace {

std::vector<std::string> numbered_ids(std::size_t n) {
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  return ids;
}

}  // namespace

MultiGraph::MultiGraph(std::vector<std::string> vertex_ids,
                       const std::vector<std::pair<std::string, std::string>>& edges)
    : ids_(std::move(vertex_ids)) {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw Error(ErrorCode::kInvalidGraph, "duplicate vertex id '" + ids_[i] + "'");
    }
  }
  edges_.reserve(edges.size());
  for (const auto& [s, t] : edges) edges_.push_back(Edge{index_of(s), index_of(t)});
  validate_and_index();
}

MultiGraph::MultiGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
    : ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw Error(ErrorCode::kInvalidGraph, "duplicate vertex id '" + ids_[i] + "'");
    }
  }
  validate_and_index();
}

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : MultiGraph(numbered_ids(vertex_count), std::move(edges)) {}

void MultiGraph::validate_and_index() {
  if (ids_.empty()) throw Error(ErrorCode::kInvalidGraph, "graph has no vertices");
  const std::size_t n = ids_.size();
  for (const Edge& e : edges_) {
    if (e.source >= n || e.target >= n) {
      throw Error(ErrorCode::kUnknownVertex, "edge endpoint out of range");
    }
  }
  // Connectivity by union-find.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : edges_) {
    const std::size_t a = find(e.source);
    const std::size_t b = find(e.target);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) throw Error(ErrorCode::kInvalidGraph, "graph is disconnected");
}

bool MultiGraph::contains(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

std::size_t MultiGraph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + std::string(id) + "'");
  }
  return it->second;
}

std::size_t MultiGraph::valence(std::size_t v) const {
  std::size_t count = 0;
  for (const Edge& e : edges_) {
    if (e.source == v) ++count;
    if (e.target == v) ++count;
  }
  return count;
}

long MultiGraph::betti_number() const {
  return static_cast<long>(edges_.size()) - static_cast<long>(ids_.size()) + 1;
}

MultiGraph MultiGraph::with_reversed_edge(std::size_t edge) const {
  std::vector<Edge> edges = edges_;
  std::swap(edges.at(edge).source, edges.at(edge).target);
  return MultiGraph(ids_, std::move(edges));
}

Divisor::Divisor(std::initializer_list<std::pair<const std::string, Rational>> terms) {
  for (const auto& [vertex, c] : terms) add(vertex, c);
}

Divisor Divisor::delta(const std::string& vertex, const Rational& coefficient) {
  Divisor d;
  d.add(vertex, coefficient);
  return d;
}

Divisor Divisor::from_vector(const MultiGraph& graph, std::span<const Rational> values) {
  if (values.size() != graph.vertex_count()) {
    throw Error(ErrorCode::kSupportMismatch, "coefficient vector has wrong length");
  }
  Divisor d;
  for (std::size_t v = 0; v < values.size(); ++v) d.add(graph.vertex_id(v), values[v]);
  return d;
}

Rational Divisor::coefficient(const std::string& vertex) const {
  auto it = terms_.find(vertex);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Divisor::add(const std::string& vertex, const Rational& amount) {
  if (amount == 0) return;
  auto [it, inserted] = terms_.emplace(vertex, amount);
  if (!inserted) {
    it->second += amount;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Divisor::degree() const {
  Rational total = 0;
  for (const auto& [vertex, c] : terms_) total += c;
  return total;
}

std::vector<Rational> Divisor::on(const MultiGraph& graph) const {
  std::vector<Rational> out(graph.vertex_count());
  for (const auto& [vertex, c] : terms_) {
    if (!graph.contains(vertex)) {
      throw Error(ErrorCode::kSupportMismatch,
                  "divisor is supported on '" + vertex + "', which is not a vertex of the graph");
    }
    out[graph.index_of(vertex)] = c;
  }
  return out;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [vertex, c] : other.terms_) add(vertex, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [vertex, c] : other.terms_) add(vertex, -c);
  return *this;
}

Divisor& Divisor::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [vertex, c] : terms_) c *= scalar;
  return *this;
}

MarkedGraph::MarkedGraph(MultiGraph graph, std::vector<long> genera, std::vector<Mark> marks,
                         long twist, StabilityCheck check)
    : graph_(std::move(graph)), genera_(std::move(genera)), marks_(std::move(marks)), twist_(twist) {
  if (genera_.size() != graph_.vertex_count()) {
    throw Error(ErrorCode::kInvalidGraph, "one genus per vertex is required");
  }
  for (long q : genera_) {
    if (q < 0) throw Error(ErrorCode::kInvalidGraph, "vertex genus must be nonnegative");
  }
  mark_vertex_.reserve(marks_.size());
  long weight_sum = 0;
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (marks_[j].id == marks_[i].id) {
        throw Error(ErrorCode::kInvalidGraph, "duplicate mark id '" + marks_[i].id + "'");
      }
    }
    mark_vertex_.push_back(graph_.index_of(marks_[i].vertex));
    weight_sum += marks_[i].weight;
  }
  const long g = genus();
  if (weight_sum != (2 * g - 2) * twist_) {
    throw Error(ErrorCode::kWeightConstraint,
                "sum of weights " + std::to_string(weight_sum) + " != (2g-2)m = " +
                    std::to_string((2 * g - 2) * twist_));
  }
  if (check == StabilityCheck::kRequireStable && !is_stable()) {
    throw Error(ErrorCode::kUnstableGraph, "marked graph is not stable");
  }
}

long MarkedGraph::genus() const {
  return graph_.betti_number() + std::accumulate(genera_.begin(), genera_.end(), 0L);
}

std::size_t MarkedGraph::marks_on(std::size_t v) const {
  std::size_t count = 0;
  for (std::size_t mv : mark_vertex_) count += (mv == v);
  return count;
}

bool MarkedGraph::is_stable() const {
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
    if (genera_[v] == 0 && graph_.valence(v) + marks_on(v) < 3) return false;
  }
  return true;
}

RationalMatrix laplacian(const MultiGraph& graph) {
  RationalMatrix lap(graph.vertex_count());
  for (const Edge& e : graph.edges()) {
    if (e.is_loop()) continue;
    lap(e.source, e.source) += 1;
    lap(e.target, e.target) += 1;
    lap(e.source, e.target) -= 1;
    lap(e.target, e.source) -= 1;
  }
  return lap;
}

Divisor canonical_divisor(const MarkedGraph& marked) {
  const MultiGraph& graph = marked.graph();
  Divisor k;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const long coefficient =
        static_cast<long>(graph.valence(v)) + 2 * marked.genus_of(v) - 2;
    k.add(graph.vertex_id(v), coefficient);
  }
  return k;
}

long genus(const MarkedGraph& marked) { return marked.genus(); }

}  // namespace neron
