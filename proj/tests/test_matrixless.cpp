#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "tspec/errors.hpp"
#include "tspec/matrixless.hpp"

using namespace tspec;
using oracle::pi;

namespace {

// Spectra manufactured as base(d) + Σ_ℓ coef[ℓ-1] h_s^ℓ on every grid.
std::vector<std::vector<double>> synthetic_spectra(const CosineSymbol& base, std::size_t n0, int k,
                                                   const std::vector<double>& coef) {
  std::vector<std::vector<double>> out;
  for (std::size_t n : extrapolation_sizes(n0, k)) {
    const double h = 1.0 / (n + 1.0);
    std::vector<double> ev(n);
    for (std::size_t j = 1; j <= n; ++j) {
      double v = base(pi * j * h), hp = 1.0;
      for (double c : coef) {
        hp *= h;
        v += c * hp;
      }
      ev[j - 1] = v;
    }
    out.push_back(ev);
  }
  return out;
}

double poly5(double t) { return 0.3 - 1.2 * t + 0.7 * t * t - 0.25 * std::pow(t, 3) + 0.04 * std::pow(t, 4) - 0.002 * std::pow(t, 5); }

CoefficientGrid grid_from(std::size_t n0, int k, double (*fn)(double)) {
  CoefficientGrid g;
  g.n0 = n0;
  g.k = k;
  g.values.assign(static_cast<std::size_t>(k - 1), std::vector<double>(n0));
  for (auto& row : g.values)
    for (std::size_t j = 1; j <= n0; ++j) row[j - 1] = fn(g.theta(j));
  return g;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("mesh doubling sizes") {
  CHECK(extrapolation_sizes(100, 4) == std::vector<std::size_t>{100, 201, 403});
  CHECK(extrapolation_sizes(25, 2) == std::vector<std::size_t>{25});
  CHECK_THROWS_AS(extrapolation_sizes(100, 1), std::invalid_argument);
  CHECK_THROWS_AS(extrapolation_sizes(3, 4), std::invalid_argument);
}

TEST_CASE("grid points align across the doubled meshes") {
  for (std::size_t n0 : {4, 25, 100})
    for (int k : {2, 4, 6}) {
      const auto sizes = extrapolation_sizes(n0, k);
      for (std::size_t s = 0; s < sizes.size(); ++s)
        for (std::size_t j = 1; j <= n0; ++j) {
          std::size_t js = j << s;
          CHECK(js <= sizes[s]);
          // d_{js, n_s} = d_{j, n0}  <=>  js (n0+1) = j (n_s+1)
          CHECK(js * (n0 + 1) == j * (sizes[s] + 1));
        }
    }
}

TEST_CASE("extrapolation recovers manufactured coefficients") {
  const auto base = laplacian_power(2);
  auto grid = extrapolate_from_spectra(base, 40, 3, synthetic_spectra(base, 40, 3, {2.0, -3.0}));
  REQUIRE(grid.values.size() == 2);
  for (std::size_t j = 0; j < 40; ++j) {
    CHECK(std::abs(grid.values[0][j] - 2.0) < 1e-10);
    CHECK(std::abs(grid.values[1][j] + 3.0) < 1e-10);
  }
  const std::vector<double> coef{0.5, -1.5, 4.0, 2.5, -7.0};
  grid = extrapolate_from_spectra(base, 30, 6, synthetic_spectra(base, 30, 6, coef));
  // the solve works in y_ℓ = c̃_ℓ h0^ℓ, so accuracy is absolute in y
  for (std::size_t l = 0; l < coef.size(); ++l)
    for (double v : grid.values[l])
      CHECK(std::abs(v - coef[l]) * std::pow(31.0, -static_cast<double>(l + 1)) < 1e-10);
}

TEST_CASE("extrapolation input checks") {
  const auto base = laplacian_power(2);
  auto spectra = synthetic_spectra(base, 20, 4, {1.0, 1.0, 1.0});
  CHECK_THROWS_AS(extrapolate_from_spectra(base, 20, 3, spectra), std::invalid_argument);
  spectra[1].pop_back();
  CHECK_THROWS_AS(extrapolate_from_spectra(base, 20, 4, spectra), std::invalid_argument);
  spectra = synthetic_spectra(base, 20, 4, {1.0, 1.0, 1.0});
  spectra[2][7] = std::nan("");
  CHECK_THROWS_AS(extrapolate_from_spectra(base, 20, 4, spectra), std::invalid_argument);
}

TEST_CASE("boundary values") {
  auto b = boundary_values(3, 2, 5);
  REQUIRE(b.size() == 4);
  CHECK(b[0].at_zero == 0.0);
  CHECK(b[0].at_pi == 0.0);
  CHECK(b[1].at_pi == 12.0);
  CHECK(b[1].at_zero == 0.0);
  CHECK(b[2].at_pi == 0.0);
  CHECK(b[3].at_pi == 2.0);
  CHECK(boundary_values(-3, 5, 5)[3].at_pi == 5.0);
  CHECK(boundary_values(1, 1, 2).size() == 1);
  CHECK(boundary_values(1, 1, 7).size() == 6);
  CHECK(boundary_values(1, 1, 7)[5].at_pi == 0.0);
}

TEST_CASE("interpolation") {
  auto grid = grid_from(60, 4, poly5);
  for (std::size_t j : {1, 7, 30, 60}) CHECK(interpolate(grid, 2, grid.theta(j)) == grid.values[1][j - 1]);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, pi);
  for (int i = 0; i < 100; ++i) {
    double t = u(rng);
    CHECK(std::abs(interpolate(grid, 1, t) - poly5(t)) <= 1e-12);
  }
  // with endpoint nodes carrying the polynomial's own values
  grid.boundary = std::vector<EndpointValues>(3, EndpointValues{poly5(0.0), poly5(pi)});
  for (int i = 0; i < 100; ++i) {
    double t = u(rng);
    CHECK(std::abs(interpolate(grid, 3, t) - poly5(t)) <= 1e-12);
  }
  CHECK(interpolate(grid, 1, 0.0) == poly5(0.0));
  CHECK(interpolate(grid, 1, pi) == poly5(pi));

  grid.boundary = boundary_values(3, 2, 4);
  CHECK(interpolate(grid, 2, pi) == 12.0);
  CHECK_THROWS_AS(interpolate(grid, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(interpolate(grid, 4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(interpolate(grid, 1, 3.2), std::invalid_argument);
  CHECK_THROWS_AS(interpolate(grid, 1, -0.1), std::invalid_argument);
}

TEST_CASE("prediction on the sampling mesh reproduces the small spectrum") {
  const auto ms = fn_family(3, 2);
  const std::size_t n0 = 30;
  const auto ev = toeplitz_eigenvalues(ms.instantiate(n0), n0);
  auto grid = extrapolate(ms, n0, 4);
  grid.boundary = boundary_values(3, 2, 4);
  const auto pred = predict(ms, grid, n0, 4);
  for (std::size_t j = 0; j < n0; ++j) CHECK(std::abs(pred[j] - ev[j]) <= 1e-12);
  CHECK_THROWS_AS(predict(ms, grid, n0, 5), std::invalid_argument);
  CHECK_THROWS_AS(predict(ms, grid, 0, 2), std::invalid_argument);
}

TEST_CASE("prediction report") {
  std::vector<double> a{1.0, 2.0};
  auto r = prediction_report(a, a, 10, 2, 3);
  CHECK(r.max_error == 0.0);
  CHECK(r.normalized_max == 0.0);
  r = prediction_report(a, {1.5, 2.0}, 10, 2, 3);
  CHECK(r.per_j[0] == 0.5);
  CHECK(r.normalized_max == doctest::Approx(0.5 * 1331 * 3));
  CHECK_THROWS_AS(prediction_report(a, {1.0}, 10, 2, 3), std::invalid_argument);
}

TEST_CASE("finite difference family errors") {
  const auto ms = fn_family(3, 2);
  auto grid = extrapolate(ms, 100, 6);
  grid.boundary = boundary_values(3, 2, 6);
  const std::size_t n = 256;
  const auto ex = toeplitz_eigenvalues(ms.instantiate(n), n);
  double e[5];
  for (int k = 1; k <= 4; ++k) e[k] = prediction_report(ex, predict(ms, grid, n, k), 100, n, k).max_error;
  CHECK(rel(e[1], 1.6359e-2) < 0.05);
  CHECK(e[3] < 10 * 1.0280e-7);
  CHECK(e[3] > 0.1 * 1.0280e-7);
  CHECK(e[4] < 10 * 3.2772e-9);
  CHECK(e[4] > 0.1 * 3.2772e-9);
  for (int k = 1; k < 4; ++k) CHECK(e[k + 1] < e[k]);
  const auto r = validate(ms, grid, n, 4);
  CHECK(r.max_error == doctest::Approx(e[4]));
}

TEST_CASE("errors shrink like h0^k when the mesh is refined") {
  const auto ms = fn_family(3, 2);
  const std::size_t n = 8192;
  const auto ex = toeplitz_eigenvalues(ms.instantiate(n), n);
  double prev = 0.0;
  for (std::size_t n0 : {25, 50, 100}) {
    auto grid = extrapolate(ms, n0, 6);
    grid.boundary = boundary_values(3, 2, 6);
    double e = prediction_report(ex, predict(ms, grid, n, 4), n0, n, 4).max_error;
    if (prev > 0.0) {
      double gain = std::log2(prev / e);
      CHECK(gain >= 4 * 0.7);
      CHECK(gain <= 4 * 1.3);
    }
    prev = e;
  }
}
