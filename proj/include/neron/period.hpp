#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "neron/graph.hpp"
#include "neron/rational.hpp"
#include "neron/theta.hpp"

namespace neron {

// z(t) = j(t) alpha + base, paired against the constant point `anchor`.
struct SectionPath {
  std::vector<Rational> alpha;
  CVector base;
  CVector anchor;
};

// j(t) = A log(t) / (2 pi i) + B with A integral symmetric PSD and B constant.
class PeriodFamily {
 public:
  // Throws Error(kMalformedInput) on shape mismatches, Error(kNotPositiveDefinite)
  // when A is not symmetric PSD or B is not symmetric.
  PeriodFamily(std::vector<std::vector<long>> a, CMatrix b, std::array<SectionPath, 2> sections);

  std::size_t genus() const noexcept { return static_cast<std::size_t>(b_.rows()); }
  const std::vector<std::vector<long>>& a() const noexcept { return a_; }
  const CMatrix& b() const noexcept { return b_; }
  const std::array<SectionPath, 2>& sections() const noexcept { return sections_; }

  // Copy with every section base shifted by `delta` in each coordinate.
  PeriodFamily with_shifted_bases(Complex delta) const;

 private:
  std::vector<std::vector<long>> a_;
  RMatrix a_real_;
  CMatrix b_;
  std::array<SectionPath, 2> sections_;

  friend CMatrix period(const PeriodFamily& f, Complex t);
};

// u(t) = -log|t| / (2 pi).
double u_parameter(Complex t);

// Throws Error(kNumericalDomain) unless 0 < |t| < 1, Error(kNotPositiveDefinite)
// when Im j(t) is not positive definite.
CMatrix period(const PeriodFamily& f, Complex t);

// (Im j(t))^{-1}.
RMatrix im_inverse(const PeriodFamily& f, Complex t);

CVector section_point(const PeriodFamily& f, std::size_t section, Complex t);

// Archimedean Neron pairing g_D[E] on C / (Z + tau Z) of D = [x1] - [x2] and
// E = [y1] - [y2]: sum_{i,j} (+-) log ||theta||(x_i - y_j + (1 + tau)/2).
// nullopt when one of the theta values has modulus <= eps.
std::optional<double> neron_pairing_genus1(Complex x1, Complex x2, Complex y1, Complex y2,
                                           Complex tau, double eps);

// The same pairing assembled from two canonical eta norms:
// log||eta||(z - o1, o1 - w + k) - log||eta||(z - o1, o1 - o2 + k), k = (1 + tau)/2.
std::optional<double> neron_pairing_via_eta(Complex z, Complex o1, Complex w, Complex o2,
                                            Complex tau, double eps);

// Cycle graph with N edges on vertices "0".."N-1" (N = 1: one vertex with a loop).
MultiGraph cycle_graph(long n);

// g_{N-cycle}(delta_a - delta_0, delta_b - delta_0).
Rational cycle_prediction(long n, long a, long b);

// Genus-1 harness family: A = (N), B = i b_imag, sections alpha = a/N and b/N with
// real bases 0.13, 0.41 and anchors 0.27, 0.62.
PeriodFamily harness_family(long n, long a, long b, double b_imag = 1.0);

// steps values from t_max down to t_min, geometrically spaced.
std::vector<double> geometric_grid(double t_max, double t_min, std::size_t steps);

struct SlopeSample {
  double t = 0;
  Complex tau;
  double im_inverse = 0;
  double value = 0;  // F(t)
};

struct SlopeReport {
  std::vector<SlopeSample> samples;
  double fitted_slope = 0;
  Rational predicted;
  double slope_error = 0;       // |fitted - predicted|
  double residual_spread = 0;   // max - min of F(t) - predicted log t over the last decade
  std::size_t resamples = 0;    // base perturbations forced by theta zeros on the path
  std::size_t dropped = 0;      // grid points past the exp underflow limit
};

// Fits F(t) = g_D[E] for D = [z(t)] - [anchor1], E = [w(t)] - [anchor2] against log t.
// Genus-1 families only. t_sequence must be strictly decreasing in (0, 1).
SlopeReport slope_check(const PeriodFamily& f, const Rational& prediction,
                        const std::vector<double>& t_sequence, double eps);

}  // namespace neron
