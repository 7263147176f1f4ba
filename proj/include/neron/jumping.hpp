#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "neron/decomposition.hpp"
#include "neron/graph.hpp"
#include "neron/rational.hpp"

namespace neron {

// d = sum_i d_i delta_{u(x_i)} - m K. Degree zero.
Divisor reduction_divisor(const MarkedGraph& marked);

// Number of bridges of each canonical type. Throws Error(kUnstableGraph) on unstable input.
std::map<BridgeType, long> bridge_counts(const MarkedGraph& marked);

// The a-coefficient of a bridge of the given type: (-(2h-1) m + sum_{i in P} d_i)^2.
Rational bridge_coefficient(const MarkedGraph& marked, const BridgeType& type);

// j_s = g(d,d) - sum over bridges of their a-coefficient. Requires stability.
Rational jump(const MarkedGraph& marked);

struct BlockContribution {
  std::size_t block = 0;
  BlockKind kind = BlockKind::kTwoConnected;
  std::vector<std::size_t> edges;
  Rational value;                   // g_{Gamma_i}(d_i, d_i)
  std::optional<BridgeType> type;   // bridges only
};

// Per-block terms of g(d,d). Requires stability.
std::vector<BlockContribution> jump_decomposed(const MarkedGraph& marked);

}  // namespace neron
