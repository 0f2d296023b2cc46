#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tspec {

/// Even real symbol f(θ) = f̂₀ + 2 Σ_{k=1..m} f̂_k cos(kθ).
///
/// The Toeplitz matrix generated by f has entries a_{i,j} = f̂_{|i-j|}.
class CosineSymbol {
 public:
  CosineSymbol() : coeffs_{0.0} {}
  explicit CosineSymbol(std::vector<double> coeffs);

  static CosineSymbol constant(double c) { return CosineSymbol({c}); }

  const std::vector<double>& coeffs() const { return coeffs_; }
  std::size_t bandwidth() const { return coeffs_.size() - 1; }
  double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  double operator()(double theta) const;
  double derivative(double theta, int order) const;

  std::string to_text() const;
  static CosineSymbol from_text(const std::string& text);

  friend bool operator==(const CosineSymbol&, const CosineSymbol&) = default;

 private:
  std::vector<double> coeffs_;
};

double eval(const CosineSymbol& c, double theta);
double derivative(const CosineSymbol& c, double theta, int order);

CosineSymbol add(const CosineSymbol& a, const CosineSymbol& b);
CosineSymbol scale(const CosineSymbol& a, double c);
CosineSymbol multiply(const CosineSymbol& a, const CosineSymbol& b);

// (2 - 2cos θ)^q
CosineSymbol laplacian_power(unsigned q);

// Kac-Murdock-Szegő type symbol, truncated once |f̂_{m+1}| < tol.
CosineSymbol kms(double rho, double tol = 1e-14);

double wiener_norm(const CosineSymbol& c, double alpha);

struct SimpleLoopReport {
  double range_min = 0.0;
  double range_max = 0.0;
  double endpoint_value = 0.0;      // f(0)
  double endpoint_slope = 0.0;      // f'(0)
  double endpoint_curvature = 0.0;  // f''(0)
  double peak_curvature = 0.0;      // f''(π)
  bool monotone_on_half_period = false;
  bool is_simple_loop = false;
};

// Sampled check of the simple-loop conditions with the minimum at 0 and the
// maximum at π. A heuristic, not a proof.
SimpleLoopReport simple_loop_check(const CosineSymbol& c, std::size_t grid_size = 4096,
                                   double tol = 1e-8);

}  // namespace tspec
