#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "oracles.hpp"
#include "tspec/symbol.hpp"

using namespace tspec;
using oracle::pi;

TEST_CASE("evaluation of builtin symbols") {
  CHECK(eval(laplacian_power(1), pi) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(eval(kms(0.5), 0.0)) < 1e-13);
  CHECK(eval(kms(0.5), pi) == doctest::Approx(1.0).epsilon(1e-13));
  for (double rho : {0.3, 0.5, 0.7})
    CHECK(eval(kms(rho), pi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analytic derivatives") {
  CHECK(derivative(laplacian_power(1), pi / 2, 1) == doctest::Approx(2.0));
  CHECK(derivative(laplacian_power(1), 0.0, 2) == doctest::Approx(2.0));
  const auto f = kms(0.5);
  const double h = 1e-4;
  double fd = (oracle::kms_value(0.5, h) - 2 * oracle::kms_value(0.5, 0.0) +
               oracle::kms_value(0.5, -h)) /
              (h * h);
  CHECK(std::abs(derivative(f, 0.0, 2) - fd) < 1e-6);
  CHECK_THROWS_AS(derivative(f, 0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(derivative(f, 0.0, 0), std::invalid_argument);
}

TEST_CASE("coefficient arithmetic") {
  const auto g = laplacian_power(1);
  CHECK(add(g, g).coeffs() == std::vector<double>{4, -2});
  CHECK(scale(g, 0).coeffs() == std::vector<double>{0, 0});
  CHECK(multiply(g, g).coeffs() == std::vector<double>{6, -4, 1});
  CHECK(multiply(g, CosineSymbol::constant(1)).coeffs() == g.coeffs());
  CHECK(add(laplacian_power(2), scale(g, 3)).coeffs() == std::vector<double>{12, -7, 1});
  CHECK(add(CosineSymbol({1}), g).bandwidth() == 1);
}

TEST_CASE("laplacian powers") {
  CHECK(laplacian_power(0).coeffs() == std::vector<double>{1});
  CHECK(laplacian_power(1).coeffs() == std::vector<double>{2, -1});
  CHECK(laplacian_power(2).coeffs() == std::vector<double>{6, -4, 1});
  const auto f3 = laplacian_power(3);
  for (double t : {0.1, 1.0, 2.5})
    CHECK(eval(f3, t) == doctest::Approx(std::pow(2 - 2 * std::cos(t), 3)).epsilon(1e-13));
}

TEST_CASE("kms coefficients and truncation") {
  const auto f = kms(0.5, 1e-14);
  CHECK(f.coeff(0) == 0.75);
  CHECK(f.coeff(1) == -0.1875);
  // smallest m with 0.1875 * 0.5^m < 1e-14
  std::size_t m = 0;
  while (0.1875 * std::pow(0.5, static_cast<double>(m)) >= 1e-14) ++m;
  CHECK(f.bandwidth() == m);
  CHECK(f.bandwidth() == 45);
  CHECK_THROWS_AS(kms(0.0), std::invalid_argument);
  CHECK_THROWS_AS(kms(1.0), std::invalid_argument);
  CHECK_THROWS_AS(kms(-0.2), std::invalid_argument);
  CHECK_THROWS_AS(kms(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("wiener norm") {
  const auto g = laplacian_power(1);
  CHECK(wiener_norm(g, 1) == doctest::Approx(6.0));
  CHECK(wiener_norm(g, 0) == doctest::Approx(4.0));
  // direct partial sums of the two-sided series
  const double rho = 0.5;
  double direct = 0.5 * (1 + rho);
  for (int k = 1; k < 200; ++k)
    direct += 2.0 * 0.25 * (1 - rho * rho) * std::pow(rho, k - 1) * (k + 1.0);
  CHECK(std::abs(wiener_norm(kms(rho), 1) - direct) < 1e-10);
  CHECK_THROWS_AS(wiener_norm(g, -1), std::invalid_argument);
}

TEST_CASE("simple loop check") {
  CHECK(simple_loop_check(laplacian_power(1)).is_simple_loop);
  CHECK(simple_loop_check(kms(0.5)).is_simple_loop);
  const auto r2 = simple_loop_check(laplacian_power(2));
  CHECK_FALSE(r2.is_simple_loop);
  CHECK(r2.endpoint_curvature == doctest::Approx(0.0));
  const auto shifted = simple_loop_check(add(laplacian_power(1), CosineSymbol::constant(1)));
  CHECK_FALSE(shifted.is_simple_loop);
  CHECK(shifted.range_min == doctest::Approx(1.0));
  CHECK(shifted.range_max == doctest::Approx(5.0));
  const auto g = simple_loop_check(laplacian_power(1));
  CHECK(g.peak_curvature == doctest::Approx(-2.0));
  CHECK(g.monotone_on_half_period);
  CHECK_THROWS_AS(simple_loop_check(laplacian_power(1), 8), std::invalid_argument);
}

TEST_CASE("text round trip") {
  const auto f = kms(0.3);
  const auto back = CosineSymbol::from_text(f.to_text());
  CHECK(back == f);
  CHECK(CosineSymbol::from_text("1\n2\n-1\n").coeffs() == std::vector<double>{2, -1});
  CHECK_THROWS_AS(CosineSymbol::from_text("2\n1\n2\n"), std::invalid_argument);
  CHECK_THROWS_AS(CosineSymbol::from_text("x"), std::invalid_argument);
  CHECK_THROWS_AS(CosineSymbol::from_text("0\nnan\n"), std::invalid_argument);
  CHECK_THROWS_AS(CosineSymbol::from_text("0\n1\n5\n"), std::invalid_argument);
  CHECK_THROWS_AS(CosineSymbol({1.0, INFINITY}), std::invalid_argument);
}

TEST_CASE("evenness on random angles") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  const std::vector<CosineSymbol> symbols{laplacian_power(1), laplacian_power(2),
                                          laplacian_power(4), kms(0.3), kms(0.7)};
  for (const auto& c : symbols)
    for (int i = 0; i < 1000; ++i) {
      double t = angle(rng);
      double v = eval(c, t);
      CHECK(std::abs(v - eval(c, 2 * pi - t)) <= 1e-12 * (1 + std::abs(v)));
    }
}

TEST_CASE("product consistency on random symbols") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-1.0, 1.0), angle(0.0, 2 * pi);
  std::uniform_int_distribution<int> width(0, 8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> ca(width(rng) + 1), cb(width(rng) + 1);
    for (double& v : ca) v = coef(rng);
    for (double& v : cb) v = coef(rng);
    CosineSymbol a(ca), b(cb);
    const auto p = multiply(a, b);
    CHECK(p.bandwidth() == a.bandwidth() + b.bandwidth());
    for (int i = 0; i < 20; ++i) {
      double t = angle(rng);
      double expect = eval(a, t) * eval(b, t);
      double scale_ = wiener_norm(a, 0) * wiener_norm(b, 0);
      CHECK(std::abs(eval(p, t) - expect) <= 1e-12 * scale_);
    }
  }
}

TEST_CASE("derivative consistency") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2 * pi);
  for (const auto& c : {laplacian_power(2), kms(0.5), kms(0.7)}) {
    auto f = [&](double t) { return eval(c, t); };
    auto df = [&](double t) { return derivative(c, t, 1); };
    for (int i = 0; i < 200; ++i) {
      double t = angle(rng);
      CHECK(std::abs(derivative(c, t, 1) - oracle::central_difference(f, t, 1e-5)) < 1e-6);
      CHECK(std::abs(derivative(c, t, 2) - oracle::central_difference(df, t, 1e-5)) < 1e-5);
    }
  }
}

TEST_CASE("kms closed form") {
  for (double rho : {0.3, 0.5, 0.7}) {
    const auto f = kms(rho, 1e-14);
    for (int i = 0; i <= 200; ++i) {
      double t = 2 * pi * i / 200.0;
      CHECK(std::abs(eval(f, t) - oracle::kms_value(rho, t)) <= 1e-10);
    }
  }
}
