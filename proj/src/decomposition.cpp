#include "neron/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "neron/canon.hpp"
#include "neron/error.hpp"
#include "neron/green.hpp"

namespace neron {

namespace {

struct Incidence {
  std::size_t edge;
  std::size_t other;
};

std::vector<std::vector<Incidence>> adjacency(const MultiGraph& graph) {
  std::vector<std::vector<Incidence>> adj(graph.vertex_count());
  const auto& edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].is_loop()) continue;
    adj[edges[i].source].push_back({i, edges[i].target});
    adj[edges[i].target].push_back({i, edges[i].source});
  }
  return adj;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Edge sets of the biconnected components (loops excluded), by lowpoint DFS.
std::vector<std::vector<std::size_t>> biconnected_edge_sets(const MultiGraph& graph) {
  const auto adj = adjacency(graph);
  const std::size_t n = graph.vertex_count();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnseen);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t timer = 0;

  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t u, std::size_t via) {
    disc[u] = low[u] = timer++;
    for (const Incidence& inc : adj[u]) {
      if (inc.edge == via) continue;
      const std::size_t w = inc.other;
      if (disc[w] == kUnseen) {
        stack.push_back(inc.edge);
        visit(w, inc.edge);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<std::size_t> component;
          std::size_t popped;
          do {
            popped = stack.back();
            stack.pop_back();
            component.push_back(popped);
          } while (popped != inc.edge);
          components.push_back(std::move(component));
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(inc.edge);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  visit(0, kUnseen);
  return components;
}

Block make_block(const MultiGraph& parent, BlockKind kind, std::vector<std::size_t> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  const auto& edges = parent.edges();
  std::vector<std::size_t> vertices;
  for (std::size_t e : edge_ids) {
    vertices.push_back(edges[e].source);
    vertices.push_back(edges[e].target);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::vector<std::size_t> local(parent.vertex_count(), 0);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = i;
    ids.push_back(parent.vertex_id(vertices[i]));
  }
  std::vector<Edge> sub_edges;
  for (std::size_t e : edge_ids) sub_edges.push_back({local[edges[e].source], local[edges[e].target]});

  // Contract everything outside the block: connected pieces of the graph minus the
  // block's edges each contain exactly one block vertex.
  UnionFind uf(parent.vertex_count());
  std::vector<bool> in_block(edges.size(), false);
  for (std::size_t e : edge_ids) in_block[e] = true;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!in_block[e]) uf.unite(edges[e].source, edges[e].target);
  }
  std::vector<std::size_t> root_to_local(parent.vertex_count(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) root_to_local[uf.find(vertices[i])] = i;
  std::vector<std::size_t> projection(parent.vertex_count());
  for (std::size_t v = 0; v < parent.vertex_count(); ++v) projection[v] = root_to_local[uf.find(v)];

  return Block{kind, std::move(edge_ids), std::move(vertices),
               MultiGraph(std::move(ids), std::move(sub_edges)), std::move(projection)};
}

// Sides of the graph after deleting one edge; nullopt-like empty result when still connected.
std::vector<bool> side_of_source(const MultiGraph& graph, std::size_t removed) {
  UnionFind uf(graph.vertex_count());
  const auto& edges = graph.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e != removed) uf.unite(edges[e].source, edges[e].target);
  }
  const std::size_t root = uf.find(edges[removed].source);
  if (uf.find(edges[removed].target) == root) return {};
  std::vector<bool> side(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) side[v] = uf.find(v) == root;
  return side;
}

}  // namespace

Divisor BlockDecomposition::pushforward(std::size_t block, const Divisor& d) const {
  if (block >= blocks_.size()) {
    throw Error(ErrorCode::kOutOfRange, "block index " + std::to_string(block) + " out of range");
  }
  const Block& b = blocks_[block];
  const auto coefficients = d.on(parent_);
  Divisor out;
  for (std::size_t v = 0; v < coefficients.size(); ++v) {
    out.add(b.subgraph.vertex_id(b.projection[v]), coefficients[v]);
  }
  return out;
}

BlockDecomposition decompose(const MultiGraph& graph) {
  std::vector<Block> blocks;
  for (auto& component : biconnected_edge_sets(graph)) {
    const BlockKind kind = component.size() == 1 ? BlockKind::kBridge : BlockKind::kTwoConnected;
    blocks.push_back(make_block(graph, kind, std::move(component)));
  }
  const auto& edges = graph.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].is_loop()) blocks.push_back(make_block(graph, BlockKind::kTwoConnected, {e}));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return BlockDecomposition(graph, std::move(blocks));
}

std::vector<std::size_t> bridges(const MultiGraph& graph) {
  const BlockDecomposition dec = decompose(graph);
  std::vector<std::size_t> out;
  for (const Block& b : dec.blocks()) {
    if (b.kind == BlockKind::kBridge) out.push_back(b.edges.front());
  }
  return out;
}

BridgeType make_bridge_type(std::vector<std::string> side_marks, long side_genus,
                            const MarkedGraph& marked) {
  std::vector<std::string> all;
  for (const Mark& mark : marked.marks()) all.push_back(mark.id);
  std::sort(all.begin(), all.end());
  std::sort(side_marks.begin(), side_marks.end());
  const Side<std::string> first{side_marks, side_genus};
  const Side<std::string> second{complement(all, side_marks), marked.genus() - side_genus};
  const Side<std::string>& chosen = canonical_side(first, second);
  return BridgeType{chosen.marks, chosen.genus};
}

BridgeType bridge_type(const MarkedGraph& marked, std::size_t edge) {
  const MultiGraph& graph = marked.graph();
  if (edge >= graph.edge_count()) {
    throw Error(ErrorCode::kOutOfRange, "edge index " + std::to_string(edge) + " out of range");
  }
  const auto side = side_of_source(graph, edge);
  if (side.empty()) {
    throw Error(ErrorCode::kNotABridge, "edge " + std::to_string(edge) + " is not a bridge");
  }
  long vertices = 0;
  long internal_edges = 0;
  long genus_sum = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (!side[v]) continue;
    ++vertices;
    genus_sum += marked.genus_of(v);
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (e != edge && side[graph.edges()[e].source]) ++internal_edges;
  }
  std::vector<std::string> side_marks;
  for (std::size_t i = 0; i < marked.marks().size(); ++i) {
    if (side[marked.mark_vertex(i)]) side_marks.push_back(marked.marks()[i].id);
  }
  const long side_genus = internal_edges - vertices + 1 + genus_sum;
  return make_bridge_type(std::move(side_marks), side_genus, marked);
}

Rational additivity_sum(const MultiGraph& graph, const Divisor& d, const Divisor& e) {
  require_degree_zero(d, "divisor d");
  require_degree_zero(e, "divisor e");
  const BlockDecomposition dec = decompose(graph);
  Rational total = 0;
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const GreenKernel kernel(dec.blocks()[i].subgraph);
    total += kernel.green(dec.pushforward(i, d), dec.pushforward(i, e));
  }
  return total;
}

Rational additivity_sum(const MarkedGraph& marked, const Divisor& d, const Divisor& e) {
  return additivity_sum(marked.graph(), d, e);
}

std::string to_string(BlockKind kind) {
  return kind == BlockKind::kBridge ? "bridge" : "two_connected";
}

std::string to_string(const BridgeType& type) {
  std::string out = "({";
  for (std::size_t i = 0; i < type.marks.size(); ++i) {
    if (i > 0) out += ",";
    out += type.marks[i];
  }
  return out + "}," + std::to_string(type.h) + ")";
}

}  // namespace neron
