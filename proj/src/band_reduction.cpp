#include <cmath>
#include <stdexcept>
#include <vector>

#include "tspec/toeplitz.hpp"

namespace tspec {

namespace {

// Lower band of a symmetric matrix with room for one bulge diagonal:
// diag_[d][c] = A(c+d, c), d = 0..b+1.
class LowerBand {
 public:
  LowerBand(const SymmetricBandedToeplitz& t) : n_(t.size()), b_(t.bandwidth()) {
    diag_.assign(b_ + 2, {});
    for (std::size_t d = 0; d <= b_ + 1; ++d) {
      std::size_t len = d < n_ ? n_ - d : 0;
      diag_[d].assign(len, d <= b_ ? t.band()[d] : 0.0);
    }
  }

  double get(std::size_t r, std::size_t c) const {
    if (r < c) std::swap(r, c);
    std::size_t d = r - c;
    return d <= b_ + 1 && r < n_ ? diag_[d][c] : 0.0;
  }

  void set(std::size_t r, std::size_t c, double v) {
    if (r < c) std::swap(r, c);
    std::size_t d = r - c;
    if (d > b_ + 1 || r >= n_) {
      if (v != 0.0) throw std::logic_error("band reduction wrote outside the band");
      return;
    }
    diag_[d][c] = v;
  }

  // A ← G A Gᵀ with G acting on rows/columns p and p+1.
  void rotate(std::size_t p, double c, double s) {
    const std::size_t q = p + 1;
    const std::size_t kmin = p > b_ + 1 ? p - b_ - 1 : 0;
    for (std::size_t k = kmin; k < p; ++k) {
      double x = get(p, k), y = get(q, k);
      if (x == 0.0 && y == 0.0) continue;
      set(p, k, c * x + s * y);
      set(q, k, -s * x + c * y);
    }
    const double app = get(p, p), aqq = get(q, q), apq = get(q, p);
    set(p, p, c * c * app + 2.0 * c * s * apq + s * s * aqq);
    set(q, q, s * s * app - 2.0 * c * s * apq + c * c * aqq);
    set(q, p, c * s * (aqq - app) + (c * c - s * s) * apq);
    const std::size_t kmax = std::min(n_ - 1, q + b_ + 1);
    for (std::size_t k = q + 1; k <= kmax; ++k) {
      double x = get(k, p), y = get(k, q);
      if (x == 0.0 && y == 0.0) continue;
      set(k, p, c * x + s * y);
      set(k, q, -s * x + c * y);
    }
  }

  // Rotation in plane (r-1, r) that zeroes A(r, col) against A(r-1, col).
  bool annihilate(std::size_t r, std::size_t col) {
    double y = get(r, col);
    if (y == 0.0) return false;
    double x = get(r - 1, col);
    double rad = std::hypot(x, y);
    rotate(r - 1, x / rad, y / rad);
    set(r, col, 0.0);
    set(r - 1, col, rad);
    return true;
  }

  std::size_t n_, b_;
  std::vector<std::vector<double>> diag_;
};

}  // namespace

Tridiagonal reduce_to_tridiagonal(const SymmetricBandedToeplitz& t) {
  LowerBand a(t);
  const std::size_t n = a.n_, b = a.b_;
  if (b >= 2) {
    for (std::size_t j = 0; j + 2 < n; ++j) {
      for (std::size_t i = std::min(j + b, n - 1); i >= j + 2; --i) {
        if (!a.annihilate(i, j)) continue;
        // The rotation in plane (i-1, i) leaves a bulge at (i+b, i-1); chase
        // it down the band in steps of b.
        for (std::size_t r = i + b; r < n; r += b)
          if (!a.annihilate(r, r - b - 1)) break;
      }
    }
  }
  Tridiagonal out;
  out.diagonal = a.diag_[0];
  out.offdiagonal = n > 1 ? a.diag_[1] : std::vector<double>{};
  return out;
}

}  // namespace tspec
