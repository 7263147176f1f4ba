#include "neron/jumping.hpp"

#include <string>

#include "neron/error.hpp"
#include "neron/green.hpp"

namespace neron {

namespace {

void require_stable(const MarkedGraph& marked) {
  if (!marked.is_stable()) {
    throw Error(ErrorCode::kUnstableGraph,
                "a genus-0 vertex has valence + marks < 3; bridge strata are undefined");
  }
}

}  // namespace

Divisor reduction_divisor(const MarkedGraph& marked) {
  Divisor d;
  for (const Mark& mark : marked.marks()) d.add(mark.vertex, mark.weight);
  return d - Rational(marked.twist()) * canonical_divisor(marked);
}

std::map<BridgeType, long> bridge_counts(const MarkedGraph& marked) {
  require_stable(marked);
  std::map<BridgeType, long> counts;
  for (std::size_t e : bridges(marked.graph())) ++counts[bridge_type(marked, e)];
  return counts;
}

Rational bridge_coefficient(const MarkedGraph& marked, const BridgeType& type) {
  mpz_class x = -(2 * type.h - 1) * marked.twist();
  for (const std::string& id : type.marks) {
    for (const Mark& mark : marked.marks()) {
      if (mark.id == id) x += mark.weight;
    }
  }
  return Rational(x * x);
}

Rational jump(const MarkedGraph& marked) {
  require_stable(marked);
  const Divisor d = reduction_divisor(marked);
  Rational j = green(marked.graph(), d, d);
  for (const auto& [type, count] : bridge_counts(marked)) {
    j -= count * bridge_coefficient(marked, type);
  }
  return j;
}

std::vector<BlockContribution> jump_decomposed(const MarkedGraph& marked) {
  require_stable(marked);
  const Divisor d = reduction_divisor(marked);
  const BlockDecomposition dec = decompose(marked.graph());
  std::vector<BlockContribution> out;
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const Block& block = dec.blocks()[i];
    const Divisor di = dec.pushforward(i, d);
    BlockContribution c{i, block.kind, block.edges, green(block.subgraph, di, di), std::nullopt};
    if (block.kind == BlockKind::kBridge) c.type = bridge_type(marked, block.edges.front());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace neron
