#include "neron/green.hpp"

#include <string>

#include "neron/error.hpp"

namespace neron {

void require_degree_zero(const Divisor& d, std::string_view what) {
  if (d.degree() != 0) {
    throw Error(ErrorCode::kDegreeNonzero,
                std::string(what) + " has degree " + format_rational(d.degree()) +
                    ", expected 0");
  }
}

RationalMatrix pseudo_inverse(const RationalMatrix& lap) {
  const std::size_t n = lap.dim();
  if (n == 0) throw Error(ErrorCode::kSingularMatrix, "empty matrix");
  if (!lap.is_symmetric()) throw Error(ErrorCode::kSingularMatrix, "Laplacian must be symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += lap(i, j);
    if (row != 0) throw Error(ErrorCode::kSingularMatrix, "Laplacian rows must sum to zero");
  }

  const Rational mean(mpz_class(1), mpz_class(n));
  RationalMatrix shifted = lap;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) shifted(i, j) += mean;
  }
  RationalMatrix pinv;
  try {
    pinv = inverse(shifted);
  } catch (const Error&) {
    throw Error(ErrorCode::kSingularMatrix,
                "kernel is larger than the constants; not a connected-graph Laplacian");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pinv(i, j) -= mean;
  }
  return pinv;
}

GreenKernel::GreenKernel(MultiGraph graph)
    : graph_(std::move(graph)), lap_(neron::laplacian(graph_)), pinv_(neron::pseudo_inverse(lap_)) {}

Rational GreenKernel::green(const Divisor& d, const Divisor& e) const {
  const auto dv = d.on(graph_);
  const auto ev = e.on(graph_);
  return pinv_.bilinear(dv, ev);
}

Rational GreenKernel::green(std::span<const Rational> d, std::span<const Rational> e) const {
  if (d.size() != graph_.vertex_count() || e.size() != graph_.vertex_count()) {
    throw Error(ErrorCode::kSupportMismatch, "coefficient vector has wrong length");
  }
  return pinv_.bilinear(d, e);
}

Rational GreenKernel::resistance(std::size_t a, std::size_t b) const {
  if (a >= graph_.vertex_count() || b >= graph_.vertex_count()) {
    throw Error(ErrorCode::kUnknownVertex, "vertex index out of range");
  }
  return pinv_(a, a) - 2 * pinv_(a, b) + pinv_(b, b);
}

Rational GreenKernel::resistance(std::string_view a, std::string_view b) const {
  return resistance(graph_.index_of(a), graph_.index_of(b));
}

Rational GreenKernel::resistance_pairing(const Divisor& d, const Divisor& e) const {
  const auto dv = d.on(graph_);
  const auto ev = e.on(graph_);
  Rational total = 0;
  for (std::size_t i = 0; i < dv.size(); ++i) {
    if (dv[i] == 0) continue;
    for (std::size_t j = 0; j < ev.size(); ++j) {
      if (ev[j] != 0) total += dv[i] * ev[j] * resistance(i, j);
    }
  }
  return total;
}

Divisor GreenKernel::phi(const Divisor& d) const {
  require_degree_zero(d, "divisor");
  const auto image = pinv_.apply(d.on(graph_));
  Divisor out;
  for (std::size_t v = 0; v < image.size(); ++v) out.add(graph_.vertex_id(v), -image[v]);
  return out;
}

Rational green(const MultiGraph& graph, const Divisor& d, const Divisor& e) {
  return GreenKernel(graph).green(d, e);
}

Rational resistance(const MultiGraph& graph, std::string_view a, std::string_view b) {
  return GreenKernel(graph).resistance(a, b);
}

Rational resistance_pairing(const MultiGraph& graph, const Divisor& d, const Divisor& e) {
  return GreenKernel(graph).resistance_pairing(d, e);
}

Divisor phi(const MultiGraph& graph, const Divisor& d) { return GreenKernel(graph).phi(d); }

Rational admissible_pairing(const AdmissibleInput& input) {
  require_degree_zero(input.d, "reduction d");
  require_degree_zero(input.e, "reduction e");
  return input.finite_part + GreenKernel(input.graph).green(input.d, input.e);
}

}  // namespace neron
