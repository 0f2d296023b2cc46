#include "tspec/toeplitz.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "bisection.hpp"

namespace tspec {

SymmetricBandedToeplitz::SymmetricBandedToeplitz(std::size_t n, std::vector<double> band)
    : n_(n), band_(std::move(band)) {
  if (n_ < 1) throw std::invalid_argument("Toeplitz size must be >= 1");
  if (band_.empty()) band_.push_back(0.0);
  if (band_.size() > n_) band_.resize(n_);
  for (double v : band_)
    if (!std::isfinite(v)) throw std::invalid_argument("Toeplitz band must be finite");
}

SymmetricBandedToeplitz SymmetricBandedToeplitz::build(const CosineSymbol& c, std::size_t n) {
  if (n < 1) throw std::invalid_argument("build: n must be >= 1");
  return SymmetricBandedToeplitz(n, c.coeffs());
}

double SymmetricBandedToeplitz::entry(std::size_t i, std::size_t j) const {
  std::size_t d = i > j ? i - j : j - i;
  return d < band_.size() ? band_[d] : 0.0;
}

namespace {

// Negative pivots of the LDLᵀ factorization of T - xI in band storage.
// Without pivoting a tiny D(i) makes later pivots inaccurate, so the count is
// refused (empty) when any |D(i)| falls below sqrt(eps) times the scale.
std::optional<std::size_t> banded_inertia(const SymmetricBandedToeplitz& t, double x) {
  const std::size_t n = t.size();
  const std::size_t m = t.bandwidth();
  const auto& a = t.band();
  double scale = std::abs(a[0] - x);
  for (std::size_t k = 1; k <= m; ++k) scale += 2.0 * std::abs(a[k]);
  const double tiny = std::sqrt(DBL_EPSILON) * scale;
  // l[i*m + r] = L(i, i-m+r); d[i] = D(i).
  thread_local std::vector<double> l, d;
  l.assign(n * m, 0.0);
  d.resize(n);
  double w[64];
  std::vector<double> wbig;
  double* wp = w;
  if (m > 64) {
    wbig.resize(m);
    wp = wbig.data();
  }
  std::size_t negatives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j0 = i >= m ? i - m : 0;
    double* li = &l[i * m];
    double diag = a[0] - x;
    for (std::size_t j = j0; j < i; ++j) {
      double s = a[i - j];
      const double* lj = &l[j * m] + m - j;
      // W(i,k) = L(i,k) D(k) for k < j already stored in wp.
      for (std::size_t k = j0; k < j; ++k) s -= wp[k - j0] * lj[k];
      wp[j - j0] = s;
      double lij = s / d[j];
      li[j + m - i] = lij;
      diag -= s * lij;
    }
    if (!(std::abs(diag) > tiny) || !std::isfinite(diag)) return std::nullopt;
    d[i] = diag;
    if (diag < 0.0) ++negatives;
  }
  return negatives;
}

// Inertia count that falls back to Sturm counts on the reduced tridiagonal
// form (built on first use) whenever the band factorization is refused.
class BandCounter {
 public:
  explicit BandCounter(const SymmetricBandedToeplitz& t) : t_(t) {}

  std::size_t operator()(double x) const {
    if (t_.bandwidth() == 0) return t_.band()[0] < x ? t_.size() : 0;
    if (auto c = banded_inertia(t_, x)) return *c;
    std::call_once(once_, [&] { tri_ = reduce_to_tridiagonal(t_); });
    return eigenvalue_count_below(tri_, x);
  }

 private:
  const SymmetricBandedToeplitz& t_;
  mutable std::once_flag once_;
  mutable Tridiagonal tri_;
};

}  // namespace

std::size_t eigenvalue_count_below(const SymmetricBandedToeplitz& t, double x) {
  if (std::isnan(x)) throw std::invalid_argument("count_below: x must not be NaN");
  if (std::isinf(x)) return x > 0 ? t.size() : 0;
  return BandCounter(t)(x);
}

namespace {

double sturm_pivmin(const Tridiagonal& t) {
  double emax = 1.0;
  for (double e : t.offdiagonal) emax = std::max(emax, e * e);
  return DBL_MIN * emax;
}

// Sturm counts for up to kLanes shifts at once; the independent recurrences
// are interleaved so the divisions pipeline.
constexpr std::size_t kLanes = 8;

void sturm_batch(const Tridiagonal& t, const std::vector<double>& e2, double pivmin,
                 const double* xs, std::size_t k, std::size_t* out) {
  const std::size_t n = t.diagonal.size();
  for (std::size_t base = 0; base < k; base += kLanes) {
    const std::size_t lanes = std::min(kLanes, k - base);
    double x[kLanes], d[kLanes];
    std::size_t neg[kLanes] = {};
    for (std::size_t q = 0; q < kLanes; ++q) {
      x[q] = xs[base + std::min(q, lanes - 1)];
      d[q] = 1.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double a = t.diagonal[i], b2 = e2[i];
      for (std::size_t q = 0; q < kLanes; ++q) {
        double v = a - x[q] - b2 / d[q];
        v = std::abs(v) < pivmin ? pivmin : v;
        neg[q] += v < 0.0;
        d[q] = v;
      }
    }
    for (std::size_t q = 0; q < lanes; ++q) out[base + q] = neg[q];
  }
}

// e2[i] = offdiagonal[i-1]^2 with e2[0] = 0.
std::vector<double> squared_offdiagonal(const Tridiagonal& t) {
  std::vector<double> e2(t.diagonal.size(), 0.0);
  for (std::size_t i = 1; i < e2.size(); ++i) e2[i] = t.offdiagonal[i - 1] * t.offdiagonal[i - 1];
  return e2;
}

}  // namespace

std::size_t eigenvalue_count_below(const Tridiagonal& t, double x) {
  if (std::isnan(x)) throw std::invalid_argument("count_below: x must not be NaN");
  if (std::isinf(x)) return x > 0 ? t.diagonal.size() : 0;
  if (t.offdiagonal.size() + 1 != t.diagonal.size())
    throw std::invalid_argument("tridiagonal: size mismatch");
  std::size_t c = 0;
  sturm_batch(t, squared_offdiagonal(t), sturm_pivmin(t), &x, 1, &c);
  return c;
}

std::vector<double> eigenvalues(const Tridiagonal& t, double tol) {
  const std::size_t n = t.diagonal.size();
  if (n == 0) return {};
  if (t.offdiagonal.size() + 1 != n) throw std::invalid_argument("tridiagonal: size mismatch");
  if (n == 1) return {t.diagonal[0]};
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(t.offdiagonal[i - 1]) : 0.0) +
               (i + 1 < n ? std::abs(t.offdiagonal[i]) : 0.0);
    lo = std::min(lo, t.diagonal[i] - r);
    hi = std::max(hi, t.diagonal[i] + r);
  }
  double pad = (hi - lo) * 1e-12 + 4.0 * DBL_EPSILON * std::max(std::abs(lo), std::abs(hi)) +
               DBL_MIN;
  lo -= pad;
  hi += pad;
  if (!(tol > 0.0)) tol = detail::default_tolerance(lo, hi);
  const auto e2 = squared_offdiagonal(t);
  const double pivmin = sturm_pivmin(t);
  return detail::bisect_all(n, lo, hi, tol, [&](const double* xs, std::size_t k, std::size_t* out) {
    sturm_batch(t, e2, pivmin, xs, k, out);
  });
}

std::vector<double> eigenvalues(const SymmetricBandedToeplitz& t, const EigenOptions& opts) {
  EigenMethod method = opts.method;
  if (method == EigenMethod::automatic)
    method = EigenMethod::tridiagonal;
  if (method == EigenMethod::tridiagonal) return eigenvalues(reduce_to_tridiagonal(t), opts.tol);

  const auto& a = t.band();
  if (t.size() == 1) return {a[0]};
  double radius = 0.0;
  for (std::size_t k = 1; k < a.size(); ++k) radius += 2.0 * std::abs(a[k]);
  double lo = a[0] - radius, hi = a[0] + radius;
  double pad = (hi - lo) * 1e-12 + 4.0 * DBL_EPSILON * std::max(std::abs(lo), std::abs(hi)) +
               DBL_MIN;
  lo -= pad;
  hi += pad;
  double tol = opts.tol > 0.0 ? opts.tol : detail::default_tolerance(lo, hi);
  const BandCounter count(t);
  return detail::bisect_all(t.size(), lo, hi, tol,
                            [&](const double* xs, std::size_t k, std::size_t* out) {
                              for (std::size_t i = 0; i < k; ++i) out[i] = count(xs[i]);
                            });
}

}  // namespace tspec
