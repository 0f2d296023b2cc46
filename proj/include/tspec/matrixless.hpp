#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tspec/expansion.hpp"
#include "tspec/momentary.hpp"
#include "tspec/toeplitz.hpp"

namespace tspec {

struct EndpointValues {
  double at_zero = 0.0;
  double at_pi = 0.0;
};

// Samples c̃_ℓ(π j h₀), j = 1..n0, ℓ = 1..k-1, with h₀ = 1/(n0+1).
struct CoefficientGrid {
  std::size_t n0 = 0;
  int k = 0;
  std::vector<std::vector<double>> values;             // values[ℓ-1][j-1]
  std::optional<std::vector<EndpointValues>> boundary;  // boundary[ℓ-1]

  double h0() const { return 1.0 / static_cast<double>(n0 + 1); }
  double theta(std::size_t j) const;
};

// Small-matrix sizes n_s = 2^s (n0+1) - 1, s = 0..k-2.
std::vector<std::size_t> extrapolation_sizes(std::size_t n0, int k);

// Solves Σ_ℓ c̃_ℓ h_s^ℓ = E_s per grid point from the spectra of
// T_{n_s}(instantiate(ms, n_s)).
CoefficientGrid extrapolate(const MomentarySymbol& ms, std::size_t n0, int k,
                            const EigenOptions& eig = {});

// Same solve from caller-supplied spectra, spectra[s] of size n_s.
CoefficientGrid extrapolate_from_spectra(const CosineSymbol& base, std::size_t n0, int k,
                                         const std::vector<std::vector<double>>& spectra);

// Endpoint values of c_ℓ, ℓ = 1..k-1, for the finite-difference family:
// c₂(π) = 4α₁, c₄(π) = α₀, all others 0.
std::vector<EndpointValues> boundary_values(double alpha1, double alpha0, int k);

// Local barycentric interpolation of degree `degree` through the nodes
// nearest θ. Endpoint nodes 0 and π take part when grid.boundary is set.
double interpolate(const CoefficientGrid& grid, int ell, double theta, int degree = 8);

std::vector<double> predict(const MomentarySymbol& ms, const CoefficientGrid& grid, std::size_t n,
                            int k, int degree = 8);

// Absolute errors |λ_j - λ̃_j| against the reference solver, normalized by
// (n0+1)^k (n+1).
ErrorReport validate(const MomentarySymbol& ms, const CoefficientGrid& grid, std::size_t n, int k,
                     int degree = 8, const EigenOptions& eig = {});

ErrorReport prediction_report(const std::vector<double>& exact, const std::vector<double>& pred,
                              std::size_t n0, std::size_t n, int k);

}  // namespace tspec
