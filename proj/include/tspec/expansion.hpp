#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tspec/quadrature.hpp"
#include "tspec/symbol.hpp"
#include "tspec/toeplitz.hpp"

namespace tspec {

enum class ExpansionKind {
  single,    // T_n(f)
  sum,       // T_n(f + g) from the spectra of T_n(f) and T_n(g)
  linear_h,  // T_n(f + g·h)
  h_to_h,    // T_n(f + g·h^h)
};

ExpansionKind parse_kind(const std::string& name);
const char* kind_name(ExpansionKind kind);

struct ErrorReport {
  std::vector<double> per_j;
  double max_error = 0.0;
  double normalized_max = 0.0;
  int k = 0;
  std::size_t n = 0;
};

std::pair<double, double> c12(const CosineSymbol& f, double s, const PVConfig& cfg = {});
std::pair<double, double> q12(const CosineSymbol& f, const CosineSymbol& g, double s,
                              const PVConfig& cfg = {});
std::pair<double, double> psi12(const CosineSymbol& f, const CosineSymbol& g, double s,
                                const PVConfig& cfg = {});

struct Gammas {
  double g11 = 0.0, g10 = 0.0, g22 = 0.0, g21 = 0.0, g20 = 0.0;
};
Gammas gammas(const CosineSymbol& f, const CosineSymbol& g, double s, const PVConfig& cfg = {});

// The matrix whose spectrum the expansion approximates.
CosineSymbol target_symbol(ExpansionKind kind, const CosineSymbol& f, const CosineSymbol& g,
                           std::size_t n);

std::vector<double> exact_eigenvalues(ExpansionKind kind, const CosineSymbol& f,
                                      const CosineSymbol& g, std::size_t n,
                                      const EigenOptions& eig = {});

// k-term approximations λ_j^(k), j = 1..n.
std::vector<double> approx_eigenvalues(ExpansionKind kind, const CosineSymbol& f,
                                       const CosineSymbol& g, std::size_t n, int k,
                                       const PVConfig& cfg = {}, const EigenOptions& eig = {});

// λ_j^(1), λ_j^(2), λ_j^(3) together; the coefficients are evaluated once.
std::array<std::vector<double>, 3> approx_eigenvalues_all(ExpansionKind kind,
                                                          const CosineSymbol& f,
                                                          const CosineSymbol& g, std::size_t n,
                                                          const PVConfig& cfg = {},
                                                          const EigenOptions& eig = {});

// Signed errors exact - approx with normalization (n+1)^k, or
// (n+1)^k / log^k(n+1) for h_to_h.
ErrorReport error_report(const std::vector<double>& exact, const std::vector<double>& approx,
                         ExpansionKind kind, int k, std::size_t n);

// Leading part of the k-term error at angle s, scaled like the normalized
// error: the next correction times (n+1)^k, or times (n+1)^k / log^k(n+1)
// for h_to_h. k is 1 or 2.
double correction_curve(ExpansionKind kind, const CosineSymbol& f, const CosineSymbol& g, int k,
                        double s, std::size_t n, const PVConfig& cfg = {});

}  // namespace tspec
