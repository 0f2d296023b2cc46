#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <random>

#include "oracles.hpp"
#include "tspec/parallel.hpp"
#include "tspec/toeplitz.hpp"

using namespace tspec;
using oracle::pi;

namespace {

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<double> laplacian_exact(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t j = 1; j <= n; ++j) out[j - 1] = 2.0 - 2.0 * std::cos(j * pi / (n + 1.0));
  return out;
}

}  // namespace

TEST_CASE("build") {
  const auto t = SymmetricBandedToeplitz::build(laplacian_power(1), 4);
  CHECK(t.size() == 4);
  CHECK(t.entry(0, 0) == 2.0);
  CHECK(t.entry(2, 1) == -1.0);
  CHECK(t.entry(1, 2) == -1.0);
  CHECK(t.entry(0, 2) == 0.0);
  const auto p = SymmetricBandedToeplitz::build(laplacian_power(2), 5);
  CHECK(p.band() == std::vector<double>{6, -4, 1});
  const auto id = SymmetricBandedToeplitz::build(CosineSymbol::constant(1), 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(id.entry(i, j) == (i == j ? 1.0 : 0.0));
  CHECK(SymmetricBandedToeplitz::build(kms(0.5), 10).bandwidth() == 9);
  CHECK_THROWS_AS(SymmetricBandedToeplitz::build(laplacian_power(1), 0), std::invalid_argument);
}

TEST_CASE("small spectra") {
  const auto ev = toeplitz_eigenvalues(laplacian_power(1), 4);
  const std::vector<double> expect{0.3819660112501051, 1.381966011250105, 2.618033988749895,
                                   3.618033988749895};
  CHECK(max_diff(ev, expect) < 1e-10);
  for (double c : {-2.5, 0.0, 3.0}) {
    auto cv = toeplitz_eigenvalues(CosineSymbol::constant(c), 7);
    for (double v : cv) CHECK(v == doctest::Approx(c));
  }
  CHECK(toeplitz_eigenvalues(kms(0.5), 1)[0] == 0.75);
  for (auto m : {EigenMethod::tridiagonal, EigenMethod::banded_inertia})
    CHECK(eigenvalues(SymmetricBandedToeplitz::build(CosineSymbol({7.0, 1.0}), 1), {0.0, m}) == std::vector<double>{7.0});
  const auto f2 = toeplitz_eigenvalues(laplacian_power(2), 8);
  CHECK(std::is_sorted(f2.begin(), f2.end()));
  CHECK(max_diff(f2, oracle::jacobi_eigenvalues(oracle::toeplitz_dense({6, -4, 1}, 8))) < 1e-10);
}

TEST_CASE("count below") {
  const auto t = SymmetricBandedToeplitz::build(laplacian_power(1), 4);
  CHECK(eigenvalue_count_below(t, 0.0) == 0);
  CHECK(eigenvalue_count_below(t, 2.0) == 2);
  CHECK(eigenvalue_count_below(t, 10.0) == 4);
  CHECK(eigenvalue_count_below(t, -INFINITY) == 0);
  CHECK(eigenvalue_count_below(t, INFINITY) == 4);
  // x hits a leading principal minor's zero: pivot breakdown must be handled
  const auto f = SymmetricBandedToeplitz::build(laplacian_power(1), 5);
  CHECK(eigenvalue_count_below(f, 2.0) == 2);  // eigenvalue exactly 2 at j = 3
  const auto big = SymmetricBandedToeplitz::build(kms(0.5), 64);
  std::size_t prev = 0;
  for (int i = 0; i <= 200; ++i) {
    std::size_t c = eigenvalue_count_below(big, -0.5 + 2.0 * i / 200.0);
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(prev == 64);
}

TEST_CASE("laplacian closed form") {
  for (std::size_t n : {16u, 128u, 1024u}) {
    CHECK(max_diff(toeplitz_eigenvalues(laplacian_power(1), n), laplacian_exact(n)) <= 1e-10);
    EigenOptions tri;
    tri.method = EigenMethod::tridiagonal;
    CHECK(max_diff(toeplitz_eigenvalues(laplacian_power(1), n, tri), laplacian_exact(n)) <= 1e-10);
  }
}

TEST_CASE("random banded symbols agree with the dense oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> width(0, 5), size(1, 64);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> band(width(rng) + 1);
    for (double& v : band) v = coef(rng);
    const std::size_t n = size(rng);
    band.resize(std::min(band.size(), n));
    const auto dense = oracle::jacobi_eigenvalues(oracle::toeplitz_dense(band, n));
    const auto t = SymmetricBandedToeplitz(n, band);
    for (auto method : {EigenMethod::banded_inertia, EigenMethod::tridiagonal}) {
      EigenOptions opts;
      opts.method = method;
      INFO("n = " << n << " m = " << t.bandwidth() << " method " << static_cast<int>(method));
      CHECK(max_diff(eigenvalues(t, opts), dense) <= 1e-9);
    }
  }
}

TEST_CASE("band reduction preserves the spectrum of a wide band") {
  const auto f = kms(0.5);
  const std::size_t n = 120;
  const auto t = SymmetricBandedToeplitz::build(f, n);
  const auto tri = reduce_to_tridiagonal(t);
  CHECK(tri.diagonal.size() == n);
  CHECK(tri.offdiagonal.size() == n - 1);
  double trace = 0.0, frob = 0.0;
  for (double d : tri.diagonal) {
    trace += d;
    frob += d * d;
  }
  for (double e : tri.offdiagonal) frob += 2 * e * e;
  double frob_t = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob_t += t.entry(i, j) * t.entry(i, j);
  CHECK(trace == doctest::Approx(n * f.coeff(0)).epsilon(1e-12));
  CHECK(frob == doctest::Approx(frob_t).epsilon(1e-12));
  const auto dense = oracle::jacobi_eigenvalues(oracle::toeplitz_dense(f.coeffs(), n));
  CHECK(max_diff(eigenvalues(tri), dense) <= 1e-10);
  EigenOptions banded;
  banded.method = EigenMethod::banded_inertia;
  CHECK(max_diff(eigenvalues(t, banded), dense) <= 1e-10);
}

TEST_CASE("tridiagonal count and spectrum") {
  Tridiagonal t{{2, 2, 2}, {-1, -1}};
  CHECK(eigenvalue_count_below(t, 2.0 - std::sqrt(2.0) + 1e-12) == 1);
  auto ev = eigenvalues(t);
  CHECK(ev[0] == doctest::Approx(2 - std::sqrt(2.0)));
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(2 + std::sqrt(2.0)));
  Tridiagonal zero_off{{1, 3, 2}, {0, 0}};
  CHECK(max_diff(eigenvalues(zero_off), {1, 2, 3}) < 1e-14);
  CHECK_THROWS_AS(eigenvalues(Tridiagonal{{1, 2}, {}}), std::invalid_argument);
}

TEST_CASE("results do not depend on the thread count") {
  const auto f = add(laplacian_power(2), scale(laplacian_power(1), 0.1));
  set_thread_count(1);
  const auto one = toeplitz_eigenvalues(f, 500);
  const auto kone = toeplitz_eigenvalues(kms(0.4), 200);
  set_thread_count(4);
  const auto four = toeplitz_eigenvalues(f, 500);
  const auto kfour = toeplitz_eigenvalues(kms(0.4), 200);
  set_thread_count(0);
  CHECK(one == four);
  CHECK(kone == kfour);
}

TEST_CASE("parallel_for covers the range and forwards exceptions") {
  set_thread_count(3);
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) hits[i]++;
  });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10,
                               [](std::size_t b, std::size_t) {
                                 if (b > 0) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  set_thread_count(0);
}
