#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>

namespace neron {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

// A point (z, tau) of C^g x H_g.
struct PeriodPoint {
  CVector z;
  CMatrix tau;
};

// Throws Error(kNotPositiveDefinite) unless tau is square, symmetric and Im tau is
// positive definite at working precision; Error(kMalformedInput) on a size mismatch with z.
void validate(const PeriodPoint& p);

// eps used when none is given: NERON_THETA_EPS if set and positive, else 1e-12.
double default_theta_eps();

struct ThetaSum {
  Complex value;
  long radius = 0;        // lattice box ||n||_inf <= radius
  std::size_t terms = 0;
};

// Truncated Riemann theta series sum_n exp(pi i n^T tau n + 2 pi i n^T z) with
// absolute tail below eps. Lattice points are summed in lexicographic order.
// Throws Error(kTruncationOverflow) when the box would exceed the term budget.
ThetaSum theta_sum(const PeriodPoint& p, double eps);
Complex theta(const PeriodPoint& p, double eps);

// (det Im tau)^{1/4} exp(-pi Im z^T (Im tau)^{-1} Im z) |theta(z; tau)|.
double theta_norm(const PeriodPoint& p, double eps);

struct PoleReport {
  std::string argument;  // "z", "w" or "0"
  double magnitude = 0;  // |theta| at that argument
};

struct EtaNorm {
  std::optional<double> value;
  std::optional<PoleReport> pole;
};

// |theta(z+w) theta(0) / (theta(z) theta(w))| exp(-2 pi Im z^T (Im tau)^{-1} Im w).
// A theta value with modulus <= eps in the denominator yields a pole report.
EtaNorm eta_norm(const CVector& z, const CVector& w, const CMatrix& tau, double eps);

}  // namespace neron
