#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "neron/graph.hpp"
#include "neron/rational.hpp"

namespace neron {

// Moore-Penrose pseudoinverse of a connected-graph Laplacian, computed exactly as
// (L + J/n)^{-1} - J/n. The result is symmetric with zero row sums.
// Throws Error(kSingularMatrix) when the input is not symmetric with zero row sums
// or has a kernel larger than the constants.
RationalMatrix pseudo_inverse(const RationalMatrix& lap);

// Green's function, effective resistance and the compensating divisor on one graph.
// Holds L and L+ so repeated queries do not redo the inversion.
class GreenKernel {
 public:
  explicit GreenKernel(MultiGraph graph);

  const MultiGraph& graph() const noexcept { return graph_; }
  const RationalMatrix& laplacian() const noexcept { return lap_; }
  const RationalMatrix& pseudo_inverse() const noexcept { return pinv_; }

  // d^T L+ e. Bi-additive, symmetric; no degree condition.
  Rational green(const Divisor& d, const Divisor& e) const;
  Rational green(std::span<const Rational> d, std::span<const Rational> e) const;

  // g(C,C) - 2 g(C,C') + g(C',C').
  Rational resistance(std::size_t a, std::size_t b) const;
  Rational resistance(std::string_view a, std::string_view b) const;

  // sum_{i,j} a_i b_j r(C_i, C_j).
  Rational resistance_pairing(const Divisor& d, const Divisor& e) const;

  // -L+ d, the zero-sum solution of L phi = -d. Requires deg d == 0.
  Divisor phi(const Divisor& d) const;

 private:
  MultiGraph graph_;
  RationalMatrix lap_;
  RationalMatrix pinv_;
};

Rational green(const MultiGraph& graph, const Divisor& d, const Divisor& e);
Rational resistance(const MultiGraph& graph, std::string_view a, std::string_view b);
Rational resistance_pairing(const MultiGraph& graph, const Divisor& d, const Divisor& e);
Divisor phi(const MultiGraph& graph, const Divisor& d);

// Reductions d, e of two relative-degree-zero divisors together with their local
// intersection number over the closed point.
struct AdmissibleInput {
  MultiGraph graph;
  Divisor d;
  Divisor e;
  Rational finite_part;
};

// <D,E>_{a,s} = <D,E>_s + g(d, e).
Rational admissible_pairing(const AdmissibleInput& input);

// Throws Error(kDegreeNonzero) unless deg d == 0.
void require_degree_zero(const Divisor& d, std::string_view what);

}  // namespace neron
