#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "neron/graph.hpp"
#include "neron/rational.hpp"

namespace neron {

enum class BlockKind { kBridge, kTwoConnected };

struct Block {
  BlockKind kind = BlockKind::kTwoConnected;
  std::vector<std::size_t> edges;     // indices into the parent graph's edges, ascending
  std::vector<std::size_t> vertices;  // parent vertex indices, ascending
  MultiGraph subgraph;                // vertex ids inherited from the parent
  // Parent vertex index -> vertex index of `subgraph`. Everything outside the block
  // is contracted onto the attachment vertex through which it hangs off the block.
  std::vector<std::size_t> projection;
};

// The graph as a pointed sum of bridges and 2-connected components.
// Blocks are ordered by their smallest edge index; each self-loop is its own block.
class BlockDecomposition {
 public:
  BlockDecomposition(const MultiGraph& parent, std::vector<Block> blocks)
      : parent_(parent), blocks_(std::move(blocks)) {}

  const MultiGraph& parent() const noexcept { return parent_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  // pi_{i*} d. Degree preserving. Throws Error(kOutOfRange) on a bad index.
  Divisor pushforward(std::size_t block, const Divisor& d) const;

 private:
  MultiGraph parent_;
  std::vector<Block> blocks_;
};

BlockDecomposition decompose(const MultiGraph& graph);

inline Divisor pushforward(const BlockDecomposition& dec, std::size_t block, const Divisor& d) {
  return dec.pushforward(block, d);
}

// Edge indices whose removal disconnects the graph.
std::vector<std::size_t> bridges(const MultiGraph& graph);

// Canonical representative of {(P, h), (P^c, g - h)}.
struct BridgeType {
  std::vector<std::string> marks;  // P, sorted
  long h = 0;

  friend bool operator==(const BridgeType&, const BridgeType&) = default;
  friend auto operator<=>(const BridgeType&, const BridgeType&) = default;
};

BridgeType make_bridge_type(std::vector<std::string> side_marks, long side_genus,
                            const MarkedGraph& marked);

// Throws Error(kNotABridge) when removing the edge leaves the graph connected.
BridgeType bridge_type(const MarkedGraph& marked, std::size_t edge);

// sum_i g_{Gamma_i}(pi_{i*} d, pi_{i*} e). Requires degree-zero d, e.
Rational additivity_sum(const MultiGraph& graph, const Divisor& d, const Divisor& e);
Rational additivity_sum(const MarkedGraph& marked, const Divisor& d, const Divisor& e);

std::string to_string(BlockKind kind);
std::string to_string(const BridgeType& type);

}  // namespace neron
