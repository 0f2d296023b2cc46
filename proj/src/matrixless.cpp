#include "tspec/matrixless.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tspec/errors.hpp"
#include "tspec/parallel.hpp"

namespace tspec {

namespace {

constexpr double kPi = std::numbers::pi;

double mesh_angle(std::size_t j, std::size_t n) {
  return kPi * static_cast<double>(j) / (static_cast<double>(n) + 1.0);
}

// LU factors with partial pivoting of the system in the scaled unknowns
// y_ℓ = c̃_ℓ h₀^ℓ, whose matrix entries (h_s/h₀)^ℓ = 2^{-sℓ} are exact.
struct ScaledVandermonde {
  std::size_t size;
  std::vector<double> lu;  // row-major
  std::vector<std::size_t> perm;

  explicit ScaledVandermonde(std::size_t L) : size(L), lu(L * L), perm(L) {
    for (std::size_t s = 0; s < L; ++s) {
      perm[s] = s;
      for (std::size_t l = 0; l < L; ++l)
        lu[s * L + l] = std::ldexp(1.0, -static_cast<int>(s * (l + 1)));
    }
    for (std::size_t c = 0; c < L; ++c) {
      std::size_t p = c;
      for (std::size_t r = c + 1; r < L; ++r)
        if (std::abs(lu[r * L + c]) > std::abs(lu[p * L + c])) p = r;
      if (lu[p * L + c] == 0.0) throw DomainError("extrapolation system is singular");
      if (p != c) {
        for (std::size_t l = 0; l < L; ++l) std::swap(lu[p * L + l], lu[c * L + l]);
        std::swap(perm[p], perm[c]);
      }
      for (std::size_t r = c + 1; r < L; ++r) {
        double m = lu[r * L + c] / lu[c * L + c];
        lu[r * L + c] = m;
        for (std::size_t l = c + 1; l < L; ++l) lu[r * L + l] -= m * lu[c * L + l];
      }
    }
  }

  std::vector<double> solve(const std::vector<double>& rhs) const {
    const std::size_t L = size;
    std::vector<double> y(L);
    for (std::size_t r = 0; r < L; ++r) {
      double v = rhs[perm[r]];
      for (std::size_t c = 0; c < r; ++c) v -= lu[r * L + c] * y[c];
      y[r] = v;
    }
    for (std::size_t r = L; r-- > 0;) {
      double v = y[r];
      for (std::size_t c = r + 1; c < L; ++c) v -= lu[r * L + c] * y[c];
      y[r] = v / lu[r * L + r];
    }
    return y;
  }
};

// Window of interpolation nodes and barycentric weights for one angle.
struct Stencil {
  std::size_t start = 0;      // first node index; node i sits at π i h₀
  std::size_t count = 0;      // degree + 1
  long exact = -1;            // node index hit exactly, if any
  std::vector<double> coef;   // normalized barycentric coefficients
};

Stencil make_stencil(const CoefficientGrid& grid, double theta, int degree) {
  if (!(theta >= 0.0 && theta <= kPi)) throw std::invalid_argument("theta must lie in [0, pi]");
  if (degree < 0) throw std::invalid_argument("interpolation degree must be >= 0");
  const std::size_t lo = grid.boundary ? 0 : 1;
  const std::size_t hi = grid.boundary ? grid.n0 + 1 : grid.n0;
  const std::size_t available = hi - lo + 1;
  const std::size_t d = std::min<std::size_t>(static_cast<std::size_t>(degree), available - 1);

  Stencil st;
  st.count = d + 1;
  const double pos = theta / (kPi * grid.h0());
  double first = std::round(pos - 0.5 * static_cast<double>(d));
  first = std::clamp(first, static_cast<double>(lo), static_cast<double>(hi - d));
  st.start = static_cast<std::size_t>(first);

  const auto nearest = static_cast<std::size_t>(
      std::clamp(std::round(pos), static_cast<double>(lo), static_cast<double>(hi)));
  if (grid.theta(nearest) == theta) {
    st.exact = static_cast<long>(nearest);
    return st;
  }
  st.coef.resize(st.count);
  double binom = 1.0, total = 0.0;
  for (std::size_t i = 0; i <= d; ++i) {
    if (i > 0) binom = binom * static_cast<double>(d - i + 1) / static_cast<double>(i);
    double diff = pos - static_cast<double>(st.start + i);
    if (diff == 0.0) {
      st.exact = static_cast<long>(st.start + i);
      st.coef.clear();
      return st;
    }
    double w = ((i % 2) ? -binom : binom) / diff;
    st.coef[i] = w;
    total += w;
  }
  for (double& c : st.coef) c /= total;
  return st;
}

double node_value(const CoefficientGrid& grid, int ell, std::size_t idx) {
  const auto l = static_cast<std::size_t>(ell - 1);
  if (idx == 0) return (*grid.boundary)[l].at_zero;
  if (idx == grid.n0 + 1) return (*grid.boundary)[l].at_pi;
  return grid.values[l][idx - 1];
}

double apply(const CoefficientGrid& grid, int ell, const Stencil& st) {
  if (st.exact >= 0) return node_value(grid, ell, static_cast<std::size_t>(st.exact));
  double v = 0.0;
  for (std::size_t i = 0; i < st.count; ++i) v += st.coef[i] * node_value(grid, ell, st.start + i);
  return v;
}

void check_ell(const CoefficientGrid& grid, int ell) {
  if (ell < 1 || ell > grid.k - 1)
    throw std::invalid_argument("coefficient index must lie in 1.." + std::to_string(grid.k - 1));
}

}  // namespace

double CoefficientGrid::theta(std::size_t j) const { return mesh_angle(j, n0); }

std::vector<std::size_t> extrapolation_sizes(std::size_t n0, int k) {
  if (k < 2) throw std::invalid_argument("extrapolation needs k >= 2");
  if (n0 < 4) throw std::invalid_argument("extrapolation needs n0 >= 4");
  std::vector<std::size_t> sizes;
  for (int s = 0; s <= k - 2; ++s) sizes.push_back((std::size_t{1} << s) * (n0 + 1) - 1);
  return sizes;
}

CoefficientGrid extrapolate_from_spectra(const CosineSymbol& base, std::size_t n0, int k,
                                         const std::vector<std::vector<double>>& spectra) {
  const auto sizes = extrapolation_sizes(n0, k);
  const std::size_t L = static_cast<std::size_t>(k - 1);
  if (spectra.size() != L) throw std::invalid_argument("expected k-1 spectra");
  for (std::size_t s = 0; s < L; ++s)
    if (spectra[s].size() != sizes[s])
      throw std::invalid_argument("spectrum " + std::to_string(s) + " has the wrong size");

  CoefficientGrid grid;
  grid.n0 = n0;
  grid.k = k;
  grid.values.assign(L, std::vector<double>(n0));
  const ScaledVandermonde V(L);
  const double h0 = grid.h0();

  for (std::size_t j = 1; j <= n0; ++j) {
    const double f = base(grid.theta(j));
    std::vector<double> rhs(L);
    for (std::size_t s = 0; s < L; ++s) {
      rhs[s] = spectra[s][(j << s) - 1] - f;
      if (!std::isfinite(rhs[s])) throw std::invalid_argument("spectra must be finite");
    }
    const std::vector<double> y = V.solve(rhs);
    double scale = 0.0, worst = 0.0;
    for (std::size_t s = 0; s < L; ++s) {
      double lhs = 0.0;
      for (std::size_t l = 0; l < L; ++l) {
        double term = y[l] * std::ldexp(1.0, -static_cast<int>(s * (l + 1)));
        lhs += term;
        scale = std::max(scale, std::abs(term));
      }
      scale = std::max(scale, std::abs(rhs[s]));
      worst = std::max(worst, std::abs(lhs - rhs[s]));
    }
    if (worst > 1e-12 * scale)
      throw ConvergenceError("extrapolation residual too large at j = " + std::to_string(j));
    double hp = 1.0;
    for (std::size_t l = 0; l < L; ++l) {
      hp *= h0;
      grid.values[l][j - 1] = y[l] / hp;
    }
  }
  return grid;
}

CoefficientGrid extrapolate(const MomentarySymbol& ms, std::size_t n0, int k,
                            const EigenOptions& eig) {
  const auto sizes = extrapolation_sizes(n0, k);
  std::vector<std::vector<double>> spectra;
  for (std::size_t n : sizes) spectra.push_back(toeplitz_eigenvalues(ms.instantiate(n), n, eig));
  return extrapolate_from_spectra(ms.base(), n0, k, spectra);
}

std::vector<EndpointValues> boundary_values(double alpha1, double alpha0, int k) {
  if (k < 2) throw std::invalid_argument("boundary values need k >= 2");
  std::vector<EndpointValues> out(static_cast<std::size_t>(k - 1));
  if (k - 1 >= 2) out[1].at_pi = 4.0 * alpha1;
  if (k - 1 >= 4) out[3].at_pi = alpha0;
  return out;
}

double interpolate(const CoefficientGrid& grid, int ell, double theta, int degree) {
  check_ell(grid, ell);
  return apply(grid, ell, make_stencil(grid, theta, degree));
}

std::vector<double> predict(const MomentarySymbol& ms, const CoefficientGrid& grid, std::size_t n,
                            int k, int degree) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1 || k > grid.k)
    throw std::invalid_argument("k must lie in 1.." + std::to_string(grid.k));
  if (grid.boundary && grid.boundary->size() + 1 < static_cast<std::size_t>(grid.k))
    throw std::invalid_argument("boundary values do not cover every coefficient");
  const double h = 1.0 / (static_cast<double>(n) + 1.0);
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      const double d = mesh_angle(j + 1, n);
      double v = ms.base()(d);
      if (k > 1) {
        const Stencil st = make_stencil(grid, d, degree);
        double hp = 1.0;
        for (int ell = 1; ell < k; ++ell) {
          hp *= h;
          v += apply(grid, ell, st) * hp;
        }
      }
      out[j] = v;
    }
  });
  return out;
}

ErrorReport prediction_report(const std::vector<double>& exact, const std::vector<double>& pred,
                              std::size_t n0, std::size_t n, int k) {
  if (exact.size() != pred.size()) throw std::invalid_argument("prediction_report: length mismatch");
  ErrorReport r;
  r.k = k;
  r.n = n;
  r.per_j.resize(exact.size());
  for (std::size_t j = 0; j < exact.size(); ++j) {
    r.per_j[j] = std::abs(exact[j] - pred[j]);
    r.max_error = std::max(r.max_error, r.per_j[j]);
  }
  r.normalized_max =
      std::pow(static_cast<double>(n0) + 1.0, k) * (static_cast<double>(n) + 1.0) * r.max_error;
  return r;
}

ErrorReport validate(const MomentarySymbol& ms, const CoefficientGrid& grid, std::size_t n, int k,
                     int degree, const EigenOptions& eig) {
  const auto pred = predict(ms, grid, n, k, degree);
  const auto exact = toeplitz_eigenvalues(ms.instantiate(n), n, eig);
  return prediction_report(exact, pred, grid.n0, n, k);
}

}  // namespace tspec
