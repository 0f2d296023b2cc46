#pragma once

#include <cstddef>
#include <vector>

#include "tspec/symbol.hpp"

namespace tspec {

struct PVConfig {
  std::size_t nodes = 4096;        // even, >= 64
  double exclusion_radius = 1e-6;  // nodes this close to σ = ±s use limit values
  double fd_step = 1e-3;           // step of the η' stencil

  void validate() const;
};

// b_f(σ,s) = (f(σ) - f(s)) / (2(cos s - cos σ)), continuous through σ = ±s.
double b_eval(const CosineSymbol& f, double sigma, double s);

// (sin s/2π) PV∫ log b_f(σ,s) / (cos σ - cos s) dσ
double eta(const CosineSymbol& f, double s, const PVConfig& cfg = {});
double eta_prime(const CosineSymbol& f, double s, const PVConfig& cfg = {});
// (sin s/2π) PV∫ b_g / (b_f (cos σ - cos s)) dσ, the derivative of η along g
double psi(const CosineSymbol& f, const CosineSymbol& g, double s, const PVConfig& cfg = {});
// (sin s/2π) PV∫ b_g / ((b_f + b_g)(cos σ - cos s)) dσ
double phi(const CosineSymbol& f, const CosineSymbol& g, double s, const PVConfig& cfg = {});

// PV∫₀^{2π} dσ/(cos s - cos σ) by a symmetric pairing rule around σ = s.
// Zero in exact arithmetic for s in (0, π).
double pv_unit_integral(double s, const PVConfig& cfg = {});

// Reusable node set for repeated evaluations with one configuration.
class PVQuadrature {
 public:
  explicit PVQuadrature(const PVConfig& cfg = {});

  const PVConfig& config() const { return cfg_; }

  double eta(const CosineSymbol& f, double s) const;
  double eta_prime(const CosineSymbol& f, double s) const;
  double psi(const CosineSymbol& f, const CosineSymbol& g, double s) const;
  double phi(const CosineSymbol& f, const CosineSymbol& g, double s) const;
  double pv_unit(double s) const;

 private:
  // η extended to all real s as an odd 2π-periodic function.
  double eta_extended(const CosineSymbol& f, double s) const;

  PVConfig cfg_;
  std::vector<double> sigma_;  // nodes in (0, π)
  std::vector<double> x_;      // cos of the nodes
};

}  // namespace tspec
