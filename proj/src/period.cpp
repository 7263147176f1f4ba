#include "neron/period.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "neron/error.hpp"
#include "neron/green.hpp"

namespace neron {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnderflowLimit = 700.0 / kPi;
constexpr int kMaxResamples = 5;
constexpr double kResampleShift = 0.0173;

bool is_psd(const std::vector<std::vector<long>>& a) {
  const std::size_t g = a.size();
  for (unsigned long mask = 1; mask < (1UL << g); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < g; ++i) {
      if (mask & (1UL << i)) rows.push_back(i);
    }
    RationalMatrix minor(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) minor(i, j) = a[rows[i]][rows[j]];
    }
    if (determinant(minor) < 0) return false;
  }
  return true;
}

double log_theta_norm(Complex x, Complex tau, double eps, bool& pole) {
  const PeriodPoint p{CVector::Constant(1, x), CMatrix::Constant(1, 1, tau)};
  const Complex value = theta(p, eps);
  if (std::abs(value) <= eps) {
    pole = true;
    return 0;
  }
  const double y = tau.imag();
  return 0.25 * std::log(y) - kPi * x.imag() * x.imag() / y + std::log(std::abs(value));
}

double max_abs_eigenvalue(const RMatrix& a) {
  if (a.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

PeriodFamily::PeriodFamily(std::vector<std::vector<long>> a, CMatrix b,
                           std::array<SectionPath, 2> sections)
    : a_(std::move(a)), b_(std::move(b)), sections_(std::move(sections)) {
  const auto g = static_cast<std::size_t>(b_.rows());
  if (g == 0 || static_cast<std::size_t>(b_.cols()) != g || a_.size() != g) {
    throw Error(ErrorCode::kMalformedInput, "A and B must be square of the same size");
  }
  a_real_ = RMatrix(b_.rows(), b_.cols());
  for (std::size_t i = 0; i < g; ++i) {
    if (a_[i].size() != g) throw Error(ErrorCode::kMalformedInput, "A must be square");
    for (std::size_t j = 0; j < g; ++j) {
      a_real_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = double(a_[i][j]);
    }
  }
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a_[i][j] != a_[j][i]) throw Error(ErrorCode::kNotPositiveDefinite, "A must be symmetric");
    }
  }
  if (!is_psd(a_)) throw Error(ErrorCode::kNotPositiveDefinite, "A must be positive semi-definite");
  if ((b_ - b_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, b_.cwiseAbs().maxCoeff())) {
    throw Error(ErrorCode::kNotPositiveDefinite, "B must be symmetric");
  }
  for (const SectionPath& s : sections_) {
    if (s.alpha.size() != g || static_cast<std::size_t>(s.base.size()) != g ||
        static_cast<std::size_t>(s.anchor.size()) != g) {
      throw Error(ErrorCode::kMalformedInput, "section path has the wrong dimension");
    }
  }
}

PeriodFamily PeriodFamily::with_shifted_bases(Complex delta) const {
  PeriodFamily out = *this;
  for (SectionPath& s : out.sections_) s.base.array() += delta;
  return out;
}

double u_parameter(Complex t) { return -std::log(std::abs(t)) / (2.0 * kPi); }

CMatrix period(const PeriodFamily& f, Complex t) {
  const double r = std::abs(t);
  if (!(r > 0) || !(r < 1)) {
    throw Error(ErrorCode::kNumericalDomain, "t must lie in the punctured unit disk");
  }
  const Complex factor = std::log(t) / Complex(0, 2.0 * kPi);
  CMatrix j = f.a_real_.cast<Complex>() * factor + f.b_;
  const RMatrix y = j.imag();
  Eigen::LLT<RMatrix> llt(y);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite, "Im j(t) is not positive definite");
  }
  return j;
}

RMatrix im_inverse(const PeriodFamily& f, Complex t) {
  const RMatrix y = period(f, t).imag();
  return y.llt().solve(RMatrix::Identity(y.rows(), y.cols()));
}

CVector section_point(const PeriodFamily& f, std::size_t section, Complex t) {
  const SectionPath& s = f.sections().at(section);
  CVector alpha(static_cast<Eigen::Index>(s.alpha.size()));
  for (std::size_t i = 0; i < s.alpha.size(); ++i) {
    alpha[static_cast<Eigen::Index>(i)] = s.alpha[i].get_d();
  }
  return period(f, t) * alpha + s.base;
}

std::optional<double> neron_pairing_genus1(Complex x1, Complex x2, Complex y1, Complex y2,
                                           Complex tau, double eps) {
  const Complex kappa = (1.0 + tau) / 2.0;
  bool pole = false;
  const double value = log_theta_norm(x1 - y1 + kappa, tau, eps, pole) -
                       log_theta_norm(x1 - y2 + kappa, tau, eps, pole) -
                       log_theta_norm(x2 - y1 + kappa, tau, eps, pole) +
                       log_theta_norm(x2 - y2 + kappa, tau, eps, pole);
  if (pole) return std::nullopt;
  return value;
}

std::optional<double> neron_pairing_via_eta(Complex z, Complex o1, Complex w, Complex o2,
                                            Complex tau, double eps) {
  const Complex kappa = (1.0 + tau) / 2.0;
  const CMatrix t = CMatrix::Constant(1, 1, tau);
  const CVector a = CVector::Constant(1, z - o1);
  const EtaNorm first = eta_norm(a, CVector::Constant(1, o1 - w + kappa), t, eps);
  const EtaNorm second = eta_norm(a, CVector::Constant(1, o1 - o2 + kappa), t, eps);
  if (!first.value || !second.value) return std::nullopt;
  return std::log(*first.value) - std::log(*second.value);
}

MultiGraph cycle_graph(long n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "cycle length must be positive");
  std::vector<Edge> edges;
  for (long k = 0; k < n; ++k) {
    edges.push_back({static_cast<std::size_t>(k), static_cast<std::size_t>((k + 1) % n)});
  }
  return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
}

Rational cycle_prediction(long n, long a, long b) {
  const MultiGraph cycle = cycle_graph(n);
  auto vertex = [n](long k) { return std::to_string(((k % n) + n) % n); };
  const Divisor d = Divisor::delta(vertex(a)) - Divisor::delta("0");
  const Divisor e = Divisor::delta(vertex(b)) - Divisor::delta("0");
  return green(cycle, d, e);
}

PeriodFamily harness_family(long n, long a, long b, double b_imag) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  auto path = [n](long k, double base, double anchor) {
    Rational alpha(mpz_class{k}, mpz_class{n});
    alpha.canonicalize();
    return SectionPath{{alpha},
                       CVector::Constant(1, Complex(base, 0)),
                       CVector::Constant(1, Complex(anchor, 0))};
  };
  return PeriodFamily({{n}}, CMatrix::Constant(1, 1, Complex(0, b_imag)),
                      {path(a, 0.13, 0.27), path(b, 0.41, 0.62)});
}

std::vector<double> geometric_grid(double t_max, double t_min, std::size_t steps) {
  if (!(t_min > 0) || !(t_max < 1) || !(t_min < t_max) || steps < 2) {
    throw Error(ErrorCode::kOutOfRange, "grid needs 0 < t_min < t_max < 1 and steps >= 2");
  }
  std::vector<double> grid(steps);
  const double ratio = std::log(t_min / t_max) / double(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) grid[k] = t_max * std::exp(ratio * double(k));
  grid.back() = t_min;
  return grid;
}

SlopeReport slope_check(const PeriodFamily& f, const Rational& prediction,
                        const std::vector<double>& t_sequence, double eps) {
  if (f.genus() != 1) throw Error(ErrorCode::kOutOfRange, "slope harness supports genus 1 only");
  for (std::size_t k = 0; k < t_sequence.size(); ++k) {
    const double t = t_sequence[k];
    if (!(t > 0 && t < 1) || (k > 0 && !(t < t_sequence[k - 1]))) {
      throw Error(ErrorCode::kOutOfRange, "t values must decrease strictly inside (0, 1)");
    }
  }
  const double a_max = max_abs_eigenvalue(RMatrix::Constant(1, 1, double(f.a()[0][0])));

  SlopeReport report;
  report.predicted = prediction;
  for (int attempt = 0;; ++attempt) {
    if (attempt > kMaxResamples) {
      throw Error(ErrorCode::kNumericalDomain, "theta zero on the section path after resampling");
    }
    const PeriodFamily fam = f.with_shifted_bases(Complex(kResampleShift * attempt, 0));
    report.samples.clear();
    report.dropped = 0;
    bool pole = false;
    for (double t : t_sequence) {
      if (a_max * u_parameter(t) > kUnderflowLimit) {
        ++report.dropped;
        continue;
      }
      const Complex tau = period(fam, t)(0, 0);
      const Complex z = section_point(fam, 0, t)[0];
      const Complex w = section_point(fam, 1, t)[0];
      const auto value = neron_pairing_genus1(z, fam.sections()[0].anchor[0], w,
                                              fam.sections()[1].anchor[0], tau, eps);
      if (!value) {
        pole = true;
        break;
      }
      report.samples.push_back({t, tau, im_inverse(fam, t)(0, 0), *value});
    }
    if (!pole) {
      report.resamples = static_cast<std::size_t>(attempt);
      break;
    }
  }
  if (report.samples.size() < 2) {
    throw Error(ErrorCode::kNumericalDomain, "fewer than two usable grid points");
  }

  double mean_x = 0;
  double mean_y = 0;
  for (const SlopeSample& s : report.samples) {
    mean_x += std::log(s.t);
    mean_y += s.value;
  }
  mean_x /= double(report.samples.size());
  mean_y /= double(report.samples.size());
  double sxy = 0;
  double sxx = 0;
  for (const SlopeSample& s : report.samples) {
    const double dx = std::log(s.t) - mean_x;
    sxy += dx * (s.value - mean_y);
    sxx += dx * dx;
  }
  report.fitted_slope = sxy / sxx;
  const double predicted = prediction.get_d();
  report.slope_error = std::abs(report.fitted_slope - predicted);

  const double cutoff = report.samples.back().t * 10.0;
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const SlopeSample& s : report.samples) {
    if (s.t > cutoff * (1 + 1e-12)) continue;
    const double residual = s.value - predicted * std::log(s.t);
    lo = std::min(lo, residual);
    hi = std::max(hi, residual);
  }
  report.residual_spread = hi - lo;
  return report;
}

}  // namespace neron
