#include "tspec/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tspec {

CosineSymbol::CosineSymbol(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw std::invalid_argument("cosine coefficients must be finite");
}

double CosineSymbol::operator()(double theta) const {
  double sum = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k)
    sum += coeffs_[k] * std::cos(static_cast<double>(k) * theta);
  return coeffs_[0] + 2.0 * sum;
}

double CosineSymbol::derivative(double theta, int order) const {
  if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
  double sum = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    double kk = static_cast<double>(k);
    sum += order == 1 ? kk * coeffs_[k] * std::sin(kk * theta)
                      : kk * kk * coeffs_[k] * std::cos(kk * theta);
  }
  return -2.0 * sum;
}

std::string CosineSymbol::to_text() const {
  std::string out = std::to_string(bandwidth()) + "\n";
  char buf[64];
  for (double c : coeffs_) {
    std::snprintf(buf, sizeof buf, "%.17g\n", c);
    out += buf;
  }
  return out;
}

CosineSymbol CosineSymbol::from_text(const std::string& text) {
  std::istringstream in(text);
  long long m = -1;
  if (!(in >> m) || m < 0) throw std::invalid_argument("symbol text: expected bandwidth m >= 0");
  std::vector<double> coeffs;
  coeffs.reserve(static_cast<std::size_t>(m) + 1);
  for (long long k = 0; k <= m; ++k) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument("symbol text: expected m+1 coefficients");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v))
      throw std::invalid_argument("symbol text: bad coefficient '" + tok + "'");
    coeffs.push_back(v);
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("symbol text: trailing data after coefficients");
  return CosineSymbol(std::move(coeffs));
}

double eval(const CosineSymbol& c, double theta) { return c(theta); }
double derivative(const CosineSymbol& c, double theta, int order) {
  return c.derivative(theta, order);
}

CosineSymbol add(const CosineSymbol& a, const CosineSymbol& b) {
  std::vector<double> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return CosineSymbol(std::move(out));
}

CosineSymbol scale(const CosineSymbol& a, double c) {
  std::vector<double> out = a.coeffs();
  for (double& v : out) v *= c;
  return CosineSymbol(std::move(out));
}

CosineSymbol multiply(const CosineSymbol& a, const CosineSymbol& b) {
  // Two-sided sequences: (a*b)_k = Σ_j a_{|j|} b_{|k-j|}.
  const long ma = static_cast<long>(a.bandwidth());
  const long mb = static_cast<long>(b.bandwidth());
  std::vector<double> out(static_cast<std::size_t>(ma + mb) + 1, 0.0);
  for (long k = 0; k <= ma + mb; ++k) {
    double sum = 0.0;
    for (long j = -ma; j <= ma; ++j) {
      long r = k - j;
      if (r < -mb || r > mb) continue;
      sum += a.coeff(static_cast<std::size_t>(std::labs(j))) *
             b.coeff(static_cast<std::size_t>(std::labs(r)));
    }
    out[static_cast<std::size_t>(k)] = sum;
  }
  return CosineSymbol(std::move(out));
}

CosineSymbol laplacian_power(unsigned q) {
  const CosineSymbol g({2.0, -1.0});
  CosineSymbol out = CosineSymbol::constant(1.0);
  for (unsigned i = 0; i < q; ++i) out = multiply(out, g);
  return out;
}

CosineSymbol kms(double rho, double tol) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("kms: rho must lie in (0,1)");
  if (!(tol > 0.0)) throw std::invalid_argument("kms: tol must be positive");
  std::vector<double> c{0.5 * (1.0 + rho)};
  double next = 0.25 * (rho * rho - 1.0);
  while (std::abs(next) >= tol) {
    c.push_back(next);
    next *= rho;
  }
  return CosineSymbol(std::move(c));
}

double wiener_norm(const CosineSymbol& c, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("wiener_norm: alpha must be >= 0");
  double sum = std::abs(c.coeff(0));
  for (std::size_t k = 1; k <= c.bandwidth(); ++k)
    sum += 2.0 * std::abs(c.coeff(k)) * std::pow(static_cast<double>(k) + 1.0, alpha);
  return sum;
}

SimpleLoopReport simple_loop_check(const CosineSymbol& c, std::size_t grid_size, double tol) {
  if (grid_size < 16) throw std::invalid_argument("simple_loop_check: grid_size must be >= 16");
  SimpleLoopReport r;
  const double pi = std::numbers::pi;
  r.range_min = r.range_max = c(0.0);
  bool monotone = true;
  for (std::size_t i = 0; i <= grid_size; ++i) {
    double theta = pi * static_cast<double>(i) / static_cast<double>(grid_size);
    double v = c(theta);
    r.range_min = std::min(r.range_min, v);
    r.range_max = std::max(r.range_max, v);
    if (i > 0 && i < grid_size && !(c.derivative(theta, 1) > 0.0)) monotone = false;
  }
  r.endpoint_value = c(0.0);
  r.endpoint_slope = c.derivative(0.0, 1);
  r.endpoint_curvature = c.derivative(0.0, 2);
  r.peak_curvature = c.derivative(pi, 2);
  r.monotone_on_half_period = monotone;
  const double scale_ = std::max(1.0, std::abs(r.range_max));
  r.is_simple_loop = std::abs(r.endpoint_value - r.range_min) <= tol * scale_ &&
                     std::abs(r.endpoint_value) <= tol * scale_ &&
                     std::abs(r.endpoint_slope) <= tol * scale_ && r.endpoint_curvature > tol &&
                     monotone && r.peak_curvature < -tol;
  return r;
}

}  // namespace tspec
