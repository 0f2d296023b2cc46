#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tspec/momentary.hpp"

using namespace tspec;

TEST_CASE("beta evaluation") {
  CHECK(beta_eval(BetaSpec::power(1, 1), 0.01) == doctest::Approx(0.01));
  CHECK(beta_eval(BetaSpec::h_to_h(), 0.5) == doctest::Approx(std::sqrt(0.5)));
  CHECK(beta_eval(BetaSpec::power(3, 2), 0.01) == doctest::Approx(3e-4));
  CHECK(beta_eval(BetaSpec::power(2, 1, 2), 0.25) ==
        doctest::Approx(2 * 0.25 * std::log(4.0) * std::log(4.0)));
  CHECK_THROWS_AS(beta_eval(BetaSpec::power(1, 1), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(beta_eval(BetaSpec::power(1, 1), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(beta_eval(BetaSpec::h_to_h(), 1.5), std::invalid_argument);
}

TEST_CASE("instantiate the finite-difference family") {
  const auto ms = fn_family(3, 2);
  const auto c = ms.instantiate(99);
  const double h = 0.01;
  REQUIRE(c.bandwidth() == 2);
  CHECK(c.coeff(0) == doctest::Approx(6 + 6 * h * h + 2 * h * h * h * h).epsilon(1e-15));
  CHECK(c.coeff(0) == doctest::Approx(6.00060002).epsilon(1e-15));
  CHECK(c.coeff(1) == doctest::Approx(-4.0003).epsilon(1e-15));
  CHECK(c.coeff(2) == doctest::Approx(1.0));
  for (std::size_t n : {1u, 10u, 1000u})
    CHECK(fn_family(0, 0).instantiate(n).coeffs() == laplacian_power(2).coeffs());
  CHECK(fn_family(-3, 5).terms().size() == 2);
  CHECK_THROWS_AS(ms.instantiate(0), std::invalid_argument);
}

TEST_CASE("instantiate general momentary symbols") {
  const MomentarySymbol plain(kms(0.5));
  CHECK(plain.instantiate(10) == kms(0.5));
  const MomentarySymbol linear(kms(0.5), {{BetaSpec::power(1, 1), laplacian_power(1)}});
  CHECK(linear.instantiate(127).coeff(0) == doctest::Approx(0.75 + 2.0 / 128).epsilon(1e-15));
}

TEST_CASE("term ordering is enforced") {
  CHECK(terms_are_ordered({BetaSpec::power(1, 2), BetaSpec::power(1, 4)}));
  CHECK(terms_are_ordered({BetaSpec::h_to_h(), BetaSpec::power(1, 1)}));
  CHECK(terms_are_ordered({BetaSpec::power(1, 1, 2), BetaSpec::power(1, 1, 1), BetaSpec::power(1, 1)}));
  CHECK_FALSE(terms_are_ordered({BetaSpec::power(1, 4), BetaSpec::power(1, 2)}));
  CHECK_FALSE(terms_are_ordered({BetaSpec::power(1, 2), BetaSpec::power(5, 2)}));
  CHECK_THROWS_AS(MomentarySymbol(laplacian_power(2), {{BetaSpec::power(1, 4), laplacian_power(1)},
                                                       {BetaSpec::power(1, 2), laplacian_power(0)}}),
                  std::invalid_argument);
}

TEST_CASE("ratios of consecutive betas decrease to zero") {
  const std::vector<BetaSpec> betas{BetaSpec::power(1, 2), BetaSpec::power(1, 4)};
  double prev = INFINITY;
  for (int e = 4; e <= 20; ++e) {
    double h = std::ldexp(1.0, -e);
    double r = beta_eval(betas[1], h) / beta_eval(betas[0], h);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev < 1e-11);
}

TEST_CASE("momentary symbols converge uniformly to the base") {
  const auto ms = fn_family(3, 2);
  double prev = INFINITY;
  for (int e = 6; e <= 14; ++e) {
    const auto c = ms.instantiate(std::size_t{1} << e);
    double worst = 0.0;
    for (int i = 0; i <= 256; ++i) {
      double t = M_PI * i / 256.0;
      worst = std::max(worst, std::abs(eval(c, t) - eval(ms.base(), t)));
    }
    CHECK(worst < prev);
    prev = worst;
  }
  CHECK(prev < 1e-6);
}
