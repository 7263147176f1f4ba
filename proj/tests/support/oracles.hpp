#pragma once

#include <cstddef>
#include <vector>

#include "neron/graph.hpp"
#include "neron/rational.hpp"

namespace neron::testing {

// Potential P with L P = delta_a - delta_b, sum P = 0, by grounding vertex b and
// solving the reduced Laplacian with fraction-free elimination. Returns P(a) - P(b).
Rational grounded_resistance(const MultiGraph& graph, std::size_t a, std::size_t b);

// Edges whose removal disconnects the graph, by removing each edge and flood filling.
std::vector<std::size_t> brute_force_bridges(const MultiGraph& graph);

bool connected_without(const MultiGraph& graph, std::size_t removed_edge);

// Laplacian built from the edge list by direct incidence counting.
RationalMatrix incidence_laplacian(const MultiGraph& graph);

// x^T M y evaluated straight from entries.
Rational quadratic(const RationalMatrix& m, const std::vector<Rational>& x,
                   const std::vector<Rational>& y);

}  // namespace neron::testing
