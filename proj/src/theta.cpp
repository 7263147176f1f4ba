#include "neron/theta.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "neron/error.hpp"

namespace neron {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDefaultEps = 1e-12;
constexpr double kMaxTerms = 5e7;

double min_eigenvalue(const RMatrix& y) {
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(y, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// Bound on sum_{||n||_inf = k} |term|: shell size times the Gaussian envelope.
double shell_bound(long k, std::size_t g, double lambda, double y1) {
  const double count = 2.0 * static_cast<double>(g) * std::pow(2.0 * k + 1.0, double(g) - 1.0);
  return count * std::exp(-kPi * lambda * k * k + 2.0 * kPi * k * y1);
}

long truncation_radius(std::size_t g, double lambda, double y1, double eps) {
  long radius = static_cast<long>(std::ceil(y1 / lambda)) + 1;
  for (;; ++radius) {
    if (std::pow(2.0 * radius + 1.0, double(g)) > kMaxTerms) {
      throw Error(ErrorCode::kTruncationOverflow,
                  "theta truncation radius " + std::to_string(radius) + " exceeds term budget");
    }
    double tail = 0;
    for (long k = radius + 1;; ++k) {
      const double term = shell_bound(k, g, lambda, y1);
      tail += term;
      if (term < tail * 1e-17 || term == 0.0) break;
    }
    if (tail < eps) return radius;
  }
}

}  // namespace

void validate(const PeriodPoint& p) {
  const auto g = p.tau.rows();
  if (g == 0 || p.tau.cols() != g) {
    throw Error(ErrorCode::kNotPositiveDefinite, "tau must be a nonempty square matrix");
  }
  if (p.z.size() != g) throw Error(ErrorCode::kMalformedInput, "z and tau sizes differ");
  const double scale = std::max(1.0, p.tau.cwiseAbs().maxCoeff());
  if ((p.tau - p.tau.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::kNotPositiveDefinite, "tau must be symmetric");
  }
  if (!p.z.allFinite() || !p.tau.allFinite()) {
    throw Error(ErrorCode::kNumericalDomain, "non-finite input");
  }
  const RMatrix y = p.tau.imag();
  if (!(min_eigenvalue(y) > 1e-12 * scale)) {
    throw Error(ErrorCode::kNotPositiveDefinite, "Im tau must be positive definite");
  }
}

double default_theta_eps() {
  if (const char* env = std::getenv("NERON_THETA_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) return v;
  }
  return kDefaultEps;
}

ThetaSum theta_sum(const PeriodPoint& p, double eps) {
  validate(p);
  if (!(eps > 0)) throw Error(ErrorCode::kNumericalDomain, "eps must be positive");
  const std::size_t g = static_cast<std::size_t>(p.tau.rows());
  const RMatrix y = p.tau.imag();
  const double lambda = min_eigenvalue(y);
  const double y1 = p.z.imag().cwiseAbs().sum();
  const long radius = truncation_radius(g, lambda, y1, eps);

  std::vector<long> n(g, -radius);
  CVector nv(static_cast<Eigen::Index>(g));
  Complex total = 0;
  std::size_t terms = 0;
  const Complex i_pi(0, kPi);
  for (;;) {
    for (std::size_t k = 0; k < g; ++k) nv[static_cast<Eigen::Index>(k)] = double(n[k]);
    const Complex quad = (nv.transpose() * p.tau * nv)(0, 0);
    const Complex lin = (nv.transpose() * p.z)(0, 0);
    total += std::exp(i_pi * quad + 2.0 * i_pi * lin);
    ++terms;
    std::size_t k = g;
    while (k > 0 && n[k - 1] == radius) n[--k] = -radius;
    if (k == 0) break;
    ++n[k - 1];
  }
  return ThetaSum{total, radius, terms};
}

Complex theta(const PeriodPoint& p, double eps) { return theta_sum(p, eps).value; }

double theta_norm(const PeriodPoint& p, double eps) {
  const Complex value = theta(p, eps);
  const RMatrix y = p.tau.imag();
  const Eigen::VectorXd im_z = p.z.imag();
  const double quad = im_z.dot(y.llt().solve(im_z));
  return std::pow(y.determinant(), 0.25) * std::exp(-kPi * quad) * std::abs(value);
}

EtaNorm eta_norm(const CVector& z, const CVector& w, const CMatrix& tau, double eps) {
  validate(PeriodPoint{z, tau});
  validate(PeriodPoint{w, tau});
  const Complex tz = theta({z, tau}, eps);
  const Complex tw = theta({w, tau}, eps);
  const Complex t0 = theta({CVector::Zero(z.size()), tau}, eps);
  const Complex tzw = theta({z + w, tau}, eps);
  for (const auto& [name, value] : {std::pair<const char*, Complex>{"z", tz}, {"w", tw}, {"0", t0}}) {
    if (std::abs(value) <= eps) return EtaNorm{std::nullopt, PoleReport{name, std::abs(value)}};
  }
  const RMatrix y = tau.imag();
  const Eigen::VectorXd im_z = z.imag();
  const Eigen::VectorXd im_w = w.imag();
  const double cross = im_z.dot(y.llt().solve(im_w));
  return EtaNorm{std::abs(tzw * t0 / (tz * tw)) * std::exp(-2.0 * kPi * cross), std::nullopt};
}

}  // namespace neron
