#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tspec/errors.hpp"
#include "tspec/parallel.hpp"

namespace tspec::detail {

// Finds all n eigenvalues in [lo, hi] given batched counts
// batch(xs, k, out): out[i] = #{λ < xs[i]}. All open intervals advance one
// halving per round; sibling intervals share the midpoint count. Each value
// depends only on its own sequence of counts, so results do not depend on
// the thread count.
template <class BatchCount>
std::vector<double> bisect_all(std::size_t n, double lo, double hi, double tol,
                               const BatchCount& batch) {
  struct Node {
    double lo, hi;
    std::size_t clo, chi;  // count(lo), count(hi)
  };
  constexpr int kMaxRounds = 200;
  std::vector<double> out(n);
  std::vector<Node> open{{lo, hi, 0, n}}, next;
  std::vector<double> mids;
  std::vector<std::size_t> counts;

  for (int round = 0; !open.empty(); ++round) {
    if (round > kMaxRounds) throw ConvergenceError("bisection exceeded its iteration cap");
    std::size_t keep = 0;
    for (const Node& nd : open) {
      double mid = 0.5 * (nd.lo + nd.hi);
      if (nd.hi - nd.lo <= tol || !(mid > nd.lo && mid < nd.hi)) {
        for (std::size_t i = nd.clo; i < nd.chi; ++i) out[i] = mid;
      } else {
        open[keep++] = nd;
      }
    }
    open.resize(keep);
    if (open.empty()) break;
    mids.resize(keep);
    counts.resize(keep);
    for (std::size_t i = 0; i < keep; ++i) mids[i] = 0.5 * (open[i].lo + open[i].hi);
    parallel_for(keep, [&](std::size_t b, std::size_t e) {
      batch(mids.data() + b, e - b, counts.data() + b);
    });
    next.clear();
    for (std::size_t i = 0; i < keep; ++i) {
      const Node& nd = open[i];
      std::size_t cm = std::clamp(counts[i], nd.clo, nd.chi);
      if (cm > nd.clo) next.push_back({nd.lo, mids[i], nd.clo, cm});
      if (nd.chi > cm) next.push_back({mids[i], nd.hi, cm, nd.chi});
    }
    open.swap(next);
  }
  return out;
}

// Default absolute tolerance: a few ulps of the largest magnitude in range.
inline double default_tolerance(double lo, double hi) {
  double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
  return 4.0 * 2.220446049250313e-16 * scale;
}

}  // namespace tspec::detail
