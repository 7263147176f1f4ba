#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "generators.hpp"
#include "neron/error.hpp"
#include "neron/theta.hpp"

namespace neron {
namespace {

using testing::Rng;
constexpr double kPi = std::numbers::pi;

CMatrix scalar_tau(Complex tau) { return CMatrix::Constant(1, 1, tau); }
CVector scalar(Complex z) { return CVector::Constant(1, z); }

// Direct genus-1 series over |n| <= 40, independent of the truncation logic.
Complex raw_theta(Complex z, Complex tau) {
  Complex total = 0;
  for (int n = -40; n <= 40; ++n) {
    total += std::exp(Complex(0, kPi) * (double(n) * n * tau + 2.0 * n * z));
  }
  return total;
}

// Random symmetric tau with Im tau = M M^T + I/2.
CMatrix random_tau(Rng& rng, int g) {
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  RMatrix m(g, g);
  RMatrix x(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      m(i, j) = u(rng);
      x(i, j) = u(rng);
    }
  }
  const RMatrix y = m * m.transpose() + 0.5 * RMatrix::Identity(g, g);
  const RMatrix re = 0.5 * (x + x.transpose());
  CMatrix tau(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) tau(i, j) = Complex(re(i, j), y(i, j));
  }
  return tau;
}

CVector random_z(Rng& rng, int g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CVector z(g);
  for (int i = 0; i < g; ++i) z[i] = Complex(u(rng), u(rng));
  return z;
}

TEST(Theta, NullValueAtI) {
  const Complex v = theta({scalar(0), scalar_tau({0, 1})}, 1e-12);
  EXPECT_NEAR(v.real(), 1.0864348112, 1e-9);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(Theta, OddZero) {
  const Complex tau(0, 2);
  const Complex v = theta({scalar((1.0 + tau) / 2.0), scalar_tau(tau)}, 1e-12);
  EXPECT_LT(std::abs(v), 1e-12);
}

TEST(Theta, EvenAndMatchesRawSeries) {
  Rng rng(testing::seed_from_env(61));
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix tau = random_tau(rng, 1);
    const CVector z = random_z(rng, 1);
    const Complex a = theta({z, tau}, 1e-13);
    EXPECT_LT(std::abs(a - theta({-z, tau}, 1e-13)), 1e-12);
    EXPECT_LT(std::abs(a - raw_theta(z[0], tau(0, 0))), 1e-11);
  }
}

TEST(Theta, HalvingEpsIsConsistent) {
  Rng rng(testing::seed_from_env(67));
  for (int trial = 0; trial < 40; ++trial) {
    const int g = 1 + trial % 3;
    const PeriodPoint p{random_z(rng, g), random_tau(rng, g)};
    const double eps = 1e-8;
    EXPECT_LE(std::abs(theta(p, eps) - theta(p, eps / 2)), eps + eps / 2);
  }
}

TEST(Theta, RejectsBadPeriodMatrices) {
  try {
    theta({scalar(0), scalar_tau({0, -1})}, 1e-12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPositiveDefinite);
  }
  CMatrix asym(2, 2);
  asym << Complex(0, 1), Complex(0.1, 0), Complex(0.2, 0), Complex(0, 1);
  EXPECT_THROW(theta({CVector::Zero(2), asym}, 1e-12), Error);
  try {
    // Genus 3 with a tiny imaginary part needs far more than the allowed lattice points.
    theta({CVector::Zero(3), CMatrix::Identity(3, 3) * Complex(0, 1e-4)}, 1e-300);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncationOverflow);
  }
}

TEST(Theta, EpsFromEnvironment) {
  ::setenv("NERON_THETA_EPS", "1e-9", 1);
  EXPECT_DOUBLE_EQ(default_theta_eps(), 1e-9);
  ::setenv("NERON_THETA_EPS", "junk", 1);
  EXPECT_DOUBLE_EQ(default_theta_eps(), 1e-12);
  ::unsetenv("NERON_THETA_EPS");
  EXPECT_DOUBLE_EQ(default_theta_eps(), 1e-12);
}

TEST(ThetaNorm, ValueAtI) {
  EXPECT_NEAR(theta_norm({scalar(0), scalar_tau({0, 1})}, 1e-12), 1.0864348112, 1e-9);
}

TEST(ThetaNorm, LatticeInvariance) {
  Rng rng(testing::seed_from_env(71));
  for (int trial = 0; trial < 60; ++trial) {
    const int g = 1 + trial % 3;
    const CMatrix tau = random_tau(rng, g);
    const CVector z = random_z(rng, g);
    Eigen::VectorXd m(g);
    Eigen::VectorXd n(g);
    for (int i = 0; i < g; ++i) {
      m[i] = double(testing::uniform(rng, -2, 2));
      n[i] = double(testing::uniform(rng, -1, 1));
    }
    const CVector shifted = z + m.cast<Complex>() + tau * n.cast<Complex>();
    EXPECT_NEAR(theta_norm({shifted, tau}, 1e-14), theta_norm({z, tau}, 1e-14), 1e-10);
  }
}

TEST(EtaNorm, RigidifiedAndSymmetric) {
  Rng rng(testing::seed_from_env(73));
  for (int trial = 0; trial < 40; ++trial) {
    const int g = 1 + trial % 2;
    const CMatrix tau = random_tau(rng, g);
    const CVector z = random_z(rng, g);
    const CVector w = random_z(rng, g);
    const CVector zero = CVector::Zero(g);
    EXPECT_NEAR(*eta_norm(z, zero, tau, 1e-13).value, 1.0, 1e-12);
    EXPECT_NEAR(*eta_norm(zero, w, tau, 1e-13).value, 1.0, 1e-12);
    EXPECT_NEAR(*eta_norm(z, w, tau, 1e-13).value, *eta_norm(w, z, tau, 1e-13).value, 1e-10);
  }
}

TEST(EtaNorm, MatchesFourRawThetaCalls) {
  const Complex tau(0, 1);
  const Complex z(0.3, 0);
  const double expected =
      std::abs(raw_theta(2.0 * z, tau) * raw_theta(0, tau) / (raw_theta(z, tau) * raw_theta(z, tau)));
  EXPECT_NEAR(*eta_norm(scalar(z), scalar(z), scalar_tau(tau), 1e-13).value, expected, 1e-12);
}

TEST(EtaNorm, PoleIsReported) {
  const Complex tau(0, 1.5);
  const EtaNorm r = eta_norm(scalar((1.0 + tau) / 2.0), scalar(0.2), scalar_tau(tau), 1e-12);
  EXPECT_FALSE(r.value.has_value());
  ASSERT_TRUE(r.pole.has_value());
  EXPECT_EQ(r.pole->argument, "z");
}

}  // namespace
}  // namespace neron
