#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace tspec::detail {

struct GaussRule {
  std::vector<double> x, w;  // on [-1, 1]
};

// Newton iteration on P_n started from the Chebyshev-like guesses.
inline GaussRule gauss_legendre(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pn = n == 1 ? z : p1;
      double pnm1 = n == 1 ? 1.0 : p0;
      dp = n * (z * pn - pnm1) / (z * z - 1.0);
      double dz = pn / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

template <class F>
double integrate_panel(const GaussRule& g, double a, double b, F&& f) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a), sum = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) sum += g.w[i] * f(c + h * g.x[i]);
  return h * sum;
}

}  // namespace tspec::detail
