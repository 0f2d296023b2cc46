#include "tspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tspec/errors.hpp"
#include "gauss_legendre.hpp"

namespace tspec {

namespace {

constexpr double kPi = std::numbers::pi;

void check_angle(double s) {
  if (!(s >= 0.0 && s <= kPi)) throw std::invalid_argument("s must lie in [0, pi]");
}

// b_f and the divided difference S_f = (b_f(x) - b_f(y)) / (y - x) in the
// variables x = cos σ, y = cos s, evaluated without cancellation.
//
// With cos kσ - cos ks = -(y - x) D_k(x, y), D_0 = 0, D_1 = 1,
// D_{k+1} = 2x D_k + 2T_k(y) - D_{k-1}, we have b = -Σ f̂_k D_k. The second
// difference E_k = (D_k(x) - D_k(y)) / (x - y) satisfies E_0 = E_1 = 0,
// E_{k+1} = 2x E_k + 2 D_k(y, y) - E_{k-1}, and S = Σ f̂_k E_k.
class Quotient {
 public:
  Quotient(const CosineSymbol& f, double y) : f_(f.coeffs()), y_(y) {
    const std::size_t m = f_.size() - 1;
    t_.assign(m + 1, 0.0);
    p_.assign(m + 1, 0.0);
    t_[0] = 1.0;
    if (m >= 1) {
      t_[1] = y;
      p_[1] = 1.0;
    }
    for (std::size_t k = 1; k < m; ++k) {
      t_[k + 1] = 2.0 * y * t_[k] - t_[k - 1];
      p_[k + 1] = 2.0 * y * p_[k] + 2.0 * t_[k] - p_[k - 1];
    }
    diag_ = 0.0;
    for (std::size_t k = 1; k <= m; ++k) diag_ -= f_[k] * p_[k];
  }

  double y() const { return y_; }
  double diagonal() const { return diag_; }

  // Returns b(x, y) and writes S(x, y).
  double operator()(double x, double& S) const {
    const std::size_t m = f_.size() - 1;
    double d_prev = 0.0, d = 1.0, e_prev = 0.0, e = 0.0;
    double b = 0.0;
    S = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
      b -= f_[k] * d;
      S += f_[k] * e;
      double d_next = 2.0 * x * d + 2.0 * t_[k] - d_prev;
      double e_next = 2.0 * x * e + 2.0 * p_[k] - e_prev;
      d_prev = d;
      d = d_next;
      e_prev = e;
      e = e_next;
    }
    return b;
  }

 private:
  const std::vector<double>& f_;
  double y_;
  std::vector<double> t_, p_;
  double diag_;
};

[[noreturn]] void not_positive(const char* what, double s) {
  throw DomainError(std::string(what) + ": b_f is not positive at s = " + std::to_string(s) +
                    " (symbol is not a simple loop)");
}

}  // namespace

void PVConfig::validate() const {
  if (nodes < 64 || nodes % 2 != 0)
    throw std::invalid_argument("quadrature nodes must be even and >= 64");
  if (!(exclusion_radius > 0.0)) throw std::invalid_argument("exclusion radius must be positive");
  if (!(fd_step > 0.0 && fd_step < 1e-2))
    throw std::invalid_argument("fd_step must lie in (0, 1e-2)");
}

double b_eval(const CosineSymbol& f, double sigma, double s) {
  check_angle(s);
  if (!std::isfinite(sigma)) throw std::invalid_argument("sigma must be finite");
  Quotient q(f, std::cos(s));
  double S = 0.0;
  return q(std::cos(sigma), S);
}

PVQuadrature::PVQuadrature(const PVConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const std::size_t half = cfg_.nodes / 2;
  sigma_.resize(half);
  x_.resize(half);
  for (std::size_t m = 0; m < half; ++m) {
    sigma_[m] = 2.0 * kPi * (static_cast<double>(m) + 0.5) / static_cast<double>(cfg_.nodes);
    x_[m] = std::cos(sigma_[m]);
  }
}

// The integrands depend on σ only through cos σ, so the nodes in (π, 2π)
// mirror those in (0, π) and the sum is doubled. Nodes within the exclusion
// radius of s (or of 2π - s by mirroring) are evaluated at x = y, where the
// divided differences take their limit values.
//
// The kernel is 1/(cos σ - cos s): with this orientation c_1 = -f'η matches
// the computed spectra and η agrees with the closed form for kms.

double PVQuadrature::eta_extended(const CosineSymbol& f, double s) const {
  const double y = std::cos(s);
  const double s0 = std::acos(std::max(-1.0, std::min(1.0, y)));
  const Quotient q(f, y);
  const double by = q.diagonal();
  if (!(by > 0.0)) not_positive("eta", s);
  double sum = 0.0;
  for (std::size_t m = 0; m < sigma_.size(); ++m) {
    double x = std::abs(sigma_[m] - s0) < cfg_.exclusion_radius ? y : x_[m];
    double S = 0.0;
    double bx = q(x, S);
    if (!(bx > 0.0)) not_positive("eta", s);
    double slope = S / by;
    double u = (y - x) * slope;
    if (!(u > -1.0)) not_positive("eta", s);
    sum += u == 0.0 ? slope : slope * std::log1p(u) / u;
  }
  return -std::sin(s) * 2.0 * sum / static_cast<double>(cfg_.nodes);
}

double PVQuadrature::eta(const CosineSymbol& f, double s) const {
  check_angle(s);
  return eta_extended(f, s);
}

double PVQuadrature::eta_prime(const CosineSymbol& f, double s) const {
  check_angle(s);
  const double h = cfg_.fd_step;
  return (eta_extended(f, s - 2.0 * h) - 8.0 * eta_extended(f, s - h) +
          8.0 * eta_extended(f, s + h) - eta_extended(f, s + 2.0 * h)) /
         (12.0 * h);
}

double PVQuadrature::psi(const CosineSymbol& f, const CosineSymbol& g, double s) const {
  check_angle(s);
  const double y = std::cos(s);
  const Quotient qf(f, y), qg(g, y);
  const double bfy = qf.diagonal(), bgy = qg.diagonal();
  if (!(bfy > 0.0)) not_positive("psi", s);
  double sum = 0.0;
  for (std::size_t m = 0; m < sigma_.size(); ++m) {
    double x = std::abs(sigma_[m] - s) < cfg_.exclusion_radius ? y : x_[m];
    double Sf = 0.0, Sg = 0.0;
    double bfx = qf(x, Sf);
    qg(x, Sg);
    if (!(bfx > 0.0)) not_positive("psi", s);
    // (b_g(x)/b_f(x) - b_g(y)/b_f(y)) / (y - x)
    sum += (Sg * bfy - Sf * bgy) / (bfx * bfy);
  }
  return -std::sin(s) * 2.0 * sum / static_cast<double>(cfg_.nodes);
}

double PVQuadrature::phi(const CosineSymbol& f, const CosineSymbol& g, double s) const {
  check_angle(s);
  const double y = std::cos(s);
  const Quotient qf(f, y), qg(g, y);
  const double bgy = qg.diagonal();
  const double bdy = qf.diagonal() + bgy;
  if (!(bdy > 0.0)) not_positive("phi", s);
  double sum = 0.0;
  for (std::size_t m = 0; m < sigma_.size(); ++m) {
    double x = std::abs(sigma_[m] - s) < cfg_.exclusion_radius ? y : x_[m];
    double Sf = 0.0, Sg = 0.0;
    double bdx = qf(x, Sf);
    bdx += qg(x, Sg);
    if (!(bdx > 0.0)) not_positive("phi", s);
    sum += (Sg * bdy - (Sf + Sg) * bgy) / (bdx * bdy);
  }
  return -std::sin(s) * 2.0 * sum / static_cast<double>(cfg_.nodes);
}

double PVQuadrature::pv_unit(double s) const {
  check_angle(s);
  if (s == 0.0 || s == kPi) throw DomainError("pv_unit: the integral diverges at s = 0 and s = pi");
  // Over [0, π] only σ = s is singular. Pair σ = s ± t on the symmetric part
  // |σ - s| < a, where the two simple poles cancel, then integrate the rest on
  // panels that double in width away from the singularity.
  static const detail::GaussRule g = detail::gauss_legendre(20);
  const double y = std::cos(s);
  const double a = std::min(s, kPi - s);
  auto paired = [&](double t) {
    return -y / (std::sin(s + 0.5 * t) * std::sin(s - 0.5 * t));
  };
  auto plain = [&](double sigma) { return 1.0 / (y - std::cos(sigma)); };
  double sum = 0.0;
  for (int p = 0; p < 8; ++p)
    sum += detail::integrate_panel(g, a * p / 8.0, a * (p + 1) / 8.0, paired);
  const double rest = kPi - 2.0 * a;
  const double sign = s < 0.5 * kPi ? 1.0 : -1.0;  // rest lies above or below s
  double d0 = a;
  while (rest > 0.0 && d0 < a + rest) {
    double d1 = std::min(2.0 * d0, a + rest);
    double lo = s + sign * d0, hi = s + sign * d1;
    sum += detail::integrate_panel(g, std::min(lo, hi), std::max(lo, hi), plain);
    d0 = d1;
  }
  return 2.0 * sum;
}

double eta(const CosineSymbol& f, double s, const PVConfig& cfg) {
  return PVQuadrature(cfg).eta(f, s);
}
double eta_prime(const CosineSymbol& f, double s, const PVConfig& cfg) {
  return PVQuadrature(cfg).eta_prime(f, s);
}
double psi(const CosineSymbol& f, const CosineSymbol& g, double s, const PVConfig& cfg) {
  return PVQuadrature(cfg).psi(f, g, s);
}
double phi(const CosineSymbol& f, const CosineSymbol& g, double s, const PVConfig& cfg) {
  return PVQuadrature(cfg).phi(f, g, s);
}
double pv_unit_integral(double s, const PVConfig& cfg) { return PVQuadrature(cfg).pv_unit(s); }

}  // namespace tspec
