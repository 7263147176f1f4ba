#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "neron/rational.hpp"

namespace neron {

// An edge with an arbitrary stored orientation. Self-loops have source == target.
struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;

  bool is_loop() const noexcept { return source == target; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite connected multigraph. Parallel edges and self-loops are allowed.
// Vertex order is declaration order and every matrix built from the graph uses it.
class MultiGraph {
 public:
  // Throws Error(kInvalidGraph) when empty or disconnected, Error(kUnknownVertex)
  // when an edge names an undeclared vertex.
  MultiGraph(std::vector<std::string> vertex_ids,
             const std::vector<std::pair<std::string, std::string>>& edges);
  MultiGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);
  // Vertices named "0", "1", ..., "n-1".
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertex_ids() const noexcept { return ids_; }
  const std::string& vertex_id(std::size_t v) const { return ids_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  // Self-loops count twice.
  std::size_t valence(std::size_t v) const;
  // First Betti number #E - #V + 1.
  long betti_number() const;

  // Copy with the stored orientation of one edge flipped.
  MultiGraph with_reversed_edge(std::size_t edge) const;

 private:
  void validate_and_index();

  std::vector<std::string> ids_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Rational combination of vertices, keyed by vertex id. Zero coefficients are not stored.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const std::string, Rational>> terms);

  static Divisor delta(const std::string& vertex, const Rational& coefficient = 1);
  static Divisor from_vector(const MultiGraph& graph, std::span<const Rational> values);

  Rational coefficient(const std::string& vertex) const;
  void add(const std::string& vertex, const Rational& amount);
  Rational degree() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<std::string, Rational>& terms() const noexcept { return terms_; }

  // Dense coefficients in the graph's vertex order.
  // Throws Error(kSupportMismatch) when the support leaves the vertex set.
  std::vector<Rational> on(const MultiGraph& graph) const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  Divisor& operator*=(const Rational& scalar);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(const Rational& s, Divisor d) { return d *= s; }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

 private:
  std::map<std::string, Rational> terms_;
};

struct Mark {
  std::string id;
  std::string vertex;
  long weight = 0;  // d_i
};

enum class StabilityCheck { kNone, kRequireStable };

// Polarized graph with marked points: the reduction graph of a pointed semistable fiber.
class MarkedGraph {
 public:
  // Throws Error(kInvalidGraph) on negative genera or size mismatch,
  // Error(kUnknownVertex) for marks on undeclared vertices,
  // Error(kWeightConstraint) unless sum(d) == (2g - 2) m,
  // Error(kUnstableGraph) when stability is requested and fails.
  MarkedGraph(MultiGraph graph, std::vector<long> genera, std::vector<Mark> marks, long twist,
              StabilityCheck check = StabilityCheck::kNone);

  const MultiGraph& graph() const noexcept { return graph_; }
  const std::vector<long>& genera() const noexcept { return genera_; }
  long genus_of(std::size_t v) const { return genera_.at(v); }
  const std::vector<Mark>& marks() const noexcept { return marks_; }
  std::size_t mark_vertex(std::size_t mark) const { return mark_vertex_.at(mark); }
  long twist() const noexcept { return twist_; }

  long genus() const;
  std::size_t marks_on(std::size_t v) const;
  // Every genus-0 vertex has valence + #marks >= 3.
  bool is_stable() const;

 private:
  MultiGraph graph_;
  std::vector<long> genera_;
  std::vector<Mark> marks_;
  std::vector<std::size_t> mark_vertex_;
  long twist_ = 0;
};

// Matrix of d_* d^* in vertex order.
RationalMatrix laplacian(const MultiGraph& graph);

// K = sum_C (v(C) + 2 q(C) - 2) C.
Divisor canonical_divisor(const MarkedGraph& marked);

// g = b(Gamma) + sum_C q(C).
long genus(const MarkedGraph& marked);

}  // namespace neron
