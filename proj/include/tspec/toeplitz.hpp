#pragma once

#include <cstddef>
#include <vector>

#include "tspec/symbol.hpp"

namespace tspec {

// Symmetric banded Toeplitz matrix with entries a_{|i-j|} for |i-j| <= m.
class SymmetricBandedToeplitz {
 public:
  SymmetricBandedToeplitz(std::size_t n, std::vector<double> band);

  // T_n(f); coefficients beyond n-1 are dropped.
  static SymmetricBandedToeplitz build(const CosineSymbol& c, std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t bandwidth() const { return band_.size() - 1; }
  const std::vector<double>& band() const { return band_; }
  double entry(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_;
  std::vector<double> band_;
};

struct Tridiagonal {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;  // size n-1
};

// Orthogonal similarity reduction of the band to tridiagonal form by Givens
// rotations with bulge chasing. O(n²m) work, O(nm) storage.
Tridiagonal reduce_to_tridiagonal(const SymmetricBandedToeplitz& t);

enum class EigenMethod { automatic, banded_inertia, tridiagonal };

struct EigenOptions {
  // Absolute bisection tolerance; <= 0 picks a few ulps of the spectral bound.
  double tol = 0.0;
  EigenMethod method = EigenMethod::automatic;
};

// Number of eigenvalues strictly below x, from the inertia of T - xI.
std::size_t eigenvalue_count_below(const SymmetricBandedToeplitz& t, double x);
std::size_t eigenvalue_count_below(const Tridiagonal& t, double x);

// All eigenvalues in nondecreasing order.
std::vector<double> eigenvalues(const SymmetricBandedToeplitz& t, const EigenOptions& opts = {});
std::vector<double> eigenvalues(const Tridiagonal& t, double tol = 0.0);

inline std::vector<double> toeplitz_eigenvalues(const CosineSymbol& c, std::size_t n,
                                                const EigenOptions& opts = {}) {
  return eigenvalues(SymmetricBandedToeplitz::build(c, n), opts);
}

}  // namespace tspec
