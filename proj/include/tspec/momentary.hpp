#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tspec/symbol.hpp"

namespace tspec {

// Scale factor β(h): either c·h^p·log^q(1/h) or h^h.
struct BetaSpec {
  enum class Form { power_log, h_to_h };
  Form form = Form::power_log;
  double c = 1.0;
  double p = 0.0;
  unsigned q = 0;

  static BetaSpec power(double c, double p, unsigned q = 0) {
    return {Form::power_log, c, p, q};
  }
  static BetaSpec h_to_h() { return {Form::h_to_h, 1.0, 0.0, 0}; }
};

double beta_eval(const BetaSpec& b, double h);

// f₀ + Σ_t β_t(h) f_t with h = 1/(n+1). Terms must be strictly ordered:
// β_{t+1}(h)/β_t(h) → 0 as h → 0.
class MomentarySymbol {
 public:
  using Term = std::pair<BetaSpec, CosineSymbol>;

  explicit MomentarySymbol(CosineSymbol base, std::vector<Term> terms = {});

  const CosineSymbol& base() const { return base_; }
  const std::vector<Term>& terms() const { return terms_; }

  CosineSymbol instantiate(std::size_t n) const;

 private:
  CosineSymbol base_;
  std::vector<Term> terms_;
};

// Finite-difference family (2-2cos θ)² + α₁(2-2cos θ)h² + α₀h⁴.
MomentarySymbol fn_family(double alpha1, double alpha0);

// True when the ratio of every consecutive pair of β strictly decreases
// along h = 2^-4 .. 2^-20.
bool terms_are_ordered(const std::vector<BetaSpec>& betas);

}  // namespace tspec
