#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fbmkl/error.hpp"
#include "fbmkl/galerkin.hpp"
#include "oracles.hpp"

using namespace fbmkl;
using std::numbers::pi;

namespace {

GalerkinMatrix build(double h, int size) {
  return assemble(HurstParams(h), size, default_quadrature(size));
}

double off_diagonal_ratio(const GalerkinMatrix& a, int n) {
  double worst = 0.0;
  for (int m = 1; m <= a.size(); ++m) {
    if (m != n) worst = std::max(worst, std::abs(a(n, m)));
  }
  return worst / a(n, n);
}

}  // namespace

TEST_CASE("brownian case is diagonal with the analytic eigenvalues") {
  const auto a = build(0.5, 8);
  double off = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 8; ++m) {
      if (n != m) off = std::max(off, std::abs(a(n, m)));
    }
    CHECK(a(n, n) == doctest::Approx(oracle::brownian_lambda(n)).epsilon(1e-10));
  }
  CHECK(off <= 1e-8);
  CHECK(a(1, 1) == doctest::Approx(4.0 / (pi * pi)).epsilon(1e-12));
  CHECK(a(1, 1) == doctest::Approx(0.405285).epsilon(1e-6));
}

TEST_CASE("entries match a brute-force double integral") {
  // The oracle itself reproduces the analytic brownian entries.
  CHECK(oracle::galerkin_entry(0.5, 1, 1) == doctest::Approx(4.0 / (pi * pi)).epsilon(1e-11));
  CHECK(std::abs(oracle::galerkin_entry(0.5, 1, 2)) <= 1e-12);
  const auto a = build(0.7, 4);
  CHECK(std::abs(a(1, 1) - oracle::galerkin_entry(0.7, 1, 1)) <= 1e-6);
  CHECK(std::abs(a(1, 2) - oracle::galerkin_entry(0.7, 1, 2)) <= 1e-6);
  CHECK(std::abs(a(3, 4) - oracle::galerkin_entry(0.7, 3, 4)) <= 1e-6);
  const auto b = build(0.3, 4);
  CHECK(std::abs(b(1, 1) - oracle::galerkin_entry(0.3, 1, 1)) <= 1e-6);
  CHECK(std::abs(b(2, 4) - oracle::galerkin_entry(0.3, 2, 4)) <= 1e-6);
}

TEST_CASE("matrix invariants") {
  for (double h : {0.1, 0.3, 0.7, 0.9}) {
    const auto a = build(h, 64);
    CHECK(a.size() == 64);
    CHECK(a.entries() == a.entries().transpose());
    for (int n = 1; n <= 64; ++n) CHECK(a(n, n) > 0.0);
    CHECK(a.entries().trace() <= 1.0 / (2.0 * h + 1.0) + 1e-9);
    CHECK(a.refinement_change() <= 1e-9);
    CHECK(a.params().h() == h);
    CHECK(a.quad_spec().panels >= default_quadrature(64).panels);
  }
}

TEST_CASE("assembly arguments and refinement budget") {
  const HurstParams p(0.4);
  CHECK_THROWS_AS(assemble(p, 0, {}), DomainError);
  CHECK_THROWS_AS(assemble(p, 4, {0, 16}), DomainError);
  CHECK_THROWS_AS(assemble(p, 4, {8, 1}), DomainError);
  AssemblyOptions strict;
  strict.tolerance = 1e-300;
  strict.max_refinements = 1;
  CHECK_THROWS_AS(assemble(HurstParams(0.05), 8, {1, 2}, strict), ConvergenceError);
}

TEST_CASE("entries do not depend on the matrix size") {
  for (double h : {0.3, 0.7}) {
    const auto small = build(h, 32);
    const auto large = build(h, 64);
    CHECK((large.entries().topLeftCorner(32, 32) - small.entries()).cwiseAbs().maxCoeff() <= 2e-9);
  }
}

TEST_CASE("off-diagonal share does not grow with N") {
  for (double h : {0.3, 0.7}) {
    const auto a32 = build(h, 32), a64 = build(h, 64), a128 = build(h, 128);
    for (int n : {4, 8}) {
      const double r32 = off_diagonal_ratio(a32, n);
      const double r64 = off_diagonal_ratio(a64, n);
      const double r128 = off_diagonal_ratio(a128, n);
      MESSAGE("H = " << h << ", n = " << n << ": max off-diagonal / diagonal = " << r32 << ", "
                     << r64 << ", " << r128 << " at N = 32, 64, 128");
      CHECK(r64 <= r32 + 1e-9);
      CHECK(r128 <= r64 + 1e-9);
    }
  }
}

TEST_CASE("the diagonal carries the eigenvalues") {
  for (double h : {0.3, 0.7}) {
    const auto a = build(h, 256);
    const auto s = eigen_spectrum(a);
    double prev = 1.0;
    for (int n : {8, 16, 32, 64}) {
      const double gap = std::abs(1.0 - s[n] / a(n, n));
      CHECK(gap <= 0.01);
      CHECK(gap < prev);
      prev = gap;
    }
  }
}

TEST_CASE("brownian spectrum") {
  const auto s = eigen_spectrum(build(0.5, 16));
  REQUIRE(s.size() == 16);
  CHECK(s.source == SpectrumSource::galerkin);
  for (int n = 1; n <= 16; ++n) {
    CHECK(s[n] == doctest::Approx(oracle::brownian_lambda(n)).epsilon(1e-6));
  }
}

TEST_CASE("diagonal input returns its sorted entries") {
  Eigen::MatrixXd d = Eigen::VectorXd::LinSpaced(7, 0.5, 3.5).reverse().asDiagonal();
  d(2, 2) = 9.0;
  const auto s = symmetric_spectrum(d, false, SpectrumSource::analytic);
  std::vector<double> expect{9.0, 3.5, 3.0, 2.0, 1.5, 1.0, 0.5};
  for (int n = 1; n <= 7; ++n) CHECK(s[n] == expect[n - 1]);
  CHECK(!s.eigenvectors);
}

TEST_CASE("spectrum matches a Nystrom discretization") {
  const auto s = eigen_spectrum(build(0.3, 64));
  const auto ny = oracle::nystrom_spectrum(0.3, 1024);
  CHECK(s[10] == doctest::Approx(ny[9]).epsilon(0.01));
  CHECK(s[1] == doctest::Approx(ny[0]).epsilon(0.01));
}

TEST_CASE("spectral result invariants") {
  for (double h : {0.2, 0.8}) {
    const auto a = build(h, 64);
    const auto s = eigen_spectrum(a, true);
    REQUIRE(s.eigenvectors);
    const Eigen::MatrixXd& v = *s.eigenvectors;
    const double norm = a.entries().norm();
    for (int i = 0; i < 64; ++i) {
      if (i > 0) CHECK(s.eigenvalues(i) <= s.eigenvalues(i - 1));
      CHECK(s.eigenvalues(i) >= -1e-10);
      CHECK((a.entries() * v.col(i) - s.eigenvalues(i) * v.col(i)).norm() <= 1e-8 * norm);
    }
    CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(64, 64)).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("symmetric_spectrum rejects bad input") {
  CHECK_THROWS_AS(symmetric_spectrum(Eigen::MatrixXd(2, 3), false, SpectrumSource::analytic),
                  DomainError);
  CHECK_THROWS_AS(symmetric_spectrum(Eigen::MatrixXd(), false, SpectrumSource::analytic),
                  DomainError);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(3, 3);
  bad(1, 1) = std::nan("");
  CHECK_THROWS_AS(symmetric_spectrum(bad, false, SpectrumSource::analytic), DomainError);
}

TEST_CASE("spectrum is stable under doubling N") {
  for (double h : {0.3, 0.7}) {
    const auto s64 = eigen_spectrum(build(h, 64));
    const auto s128 = eigen_spectrum(build(h, 128));
    for (int n = 1; n <= 16; ++n) CHECK(s64[n] == doctest::Approx(s128[n]).epsilon(0.005));
  }
}

TEST_CASE("trace approaches 1/(2H+1) from below") {
  for (double h : {0.3, 0.7}) {
    double prev = 0.0;
    for (int size : {32, 64, 128, 256}) {
      const auto s = eigen_spectrum(build(h, size));
      const double sum = s.eigenvalues.sum();
      CHECK(sum <= 1.0 / (2.0 * h + 1.0));
      CHECK(sum > prev);
      prev = sum;
    }
  }
}

TEST_CASE("printed prefactor formula") {
  const HurstParams p(0.5);
  CHECK(bronski_prediction(p, 1) == doctest::Approx(1.0).epsilon(1e-15));
  // sin(pi/2) Gamma(2) / 2^2
  CHECK(bronski_prediction(p, 2) == doctest::Approx(0.25).epsilon(1e-15));
  for (double h : {0.1, 0.6}) {
    for (int n = 1; n < 200; ++n) {
      CHECK(bronski_prediction(HurstParams(h), n + 1) < bronski_prediction(HurstParams(h), n));
    }
    CHECK(bronski_prediction(HurstParams(h), 1000000) < 1e-6);
  }
  CHECK_THROWS_AS(bronski_prediction(p, 0), DomainError);
}

TEST_CASE("fit of the analytic brownian spectrum") {
  std::vector<double> lam(32);
  for (int n = 1; n <= 32; ++n) lam[n - 1] = oracle::brownian_lambda(n);
  const auto fit = fit_asymptotics(lam, {4, 32});
  CHECK(std::abs(fit.exponent_p - 2.0) <= 0.05);
  const auto shifted = fit_asymptotics(lam, {4, 32}, 0.5);
  CHECK(shifted.exponent_p == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(shifted.prefactor_c == doctest::Approx(1.0 / (pi * pi)).epsilon(1e-12));
  CHECK(shifted.index_offset == 0.5);
}

TEST_CASE("fit of an exact power law") {
  std::vector<double> lam(20);
  for (int n = 1; n <= 20; ++n) lam[n - 1] = 7.0 * std::pow(n, -2.4);
  const auto fit = fit_asymptotics(lam, {1, 20});
  CHECK(fit.exponent_p == doctest::Approx(2.4).epsilon(1e-13));
  CHECK(fit.prefactor_c == doctest::Approx(7.0).epsilon(1e-13));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(fit.fit_range.lo == 1);
  CHECK(fit.fit_range.hi == 20);
}

TEST_CASE("fit of the H = 0.7 Galerkin spectrum") {
  const auto fit = fit_asymptotics(eigen_spectrum(build(0.7, 256)), {8, 64});
  CHECK(std::abs(fit.exponent_p - 2.4) <= 0.1);
  CHECK(fit.r_squared >= 0.0);
  CHECK(fit.r_squared <= 1.0);
  CHECK(fit.prefactor_c > 0.0);
}

TEST_CASE("fit preconditions") {
  std::vector<double> lam(10, 1.0);
  CHECK_THROWS_AS(fit_asymptotics(lam, {1, 11}), EstimationError);
  CHECK_THROWS_AS(fit_asymptotics(lam, {0, 8}), EstimationError);
  CHECK_THROWS_AS(fit_asymptotics(lam, {3, 6}), EstimationError);
  CHECK_THROWS_AS(fit_asymptotics(lam, {1, 8}, 1.0), EstimationError);
  lam[4] = 0.0;
  CHECK_THROWS_AS(fit_asymptotics(lam, {1, 8}), EstimationError);
  lam[4] = -1e-3;
  CHECK_THROWS_AS(fit_asymptotics(lam, {2, 9}), EstimationError);
  CHECK_NOTHROW(fit_asymptotics(lam, {6, 10}));
}

TEST_CASE("decay exponent stays above one and falls toward it as H shrinks") {
  double prev = 0.0;
  for (double h : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto fit = fit_asymptotics(eigen_spectrum(build(h, 256)), {8, 64});
    CHECK(fit.exponent_p > 1.0);
    CHECK(fit.exponent_p > prev);
    prev = fit.exponent_p;
  }
}
