#include "tspec/momentary.hpp"

#include <cmath>
#include <stdexcept>

namespace tspec {

double beta_eval(const BetaSpec& b, double h) {
  if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("beta_eval: h must lie in (0,1)");
  if (b.form == BetaSpec::Form::h_to_h) return std::pow(h, h);
  return b.c * std::pow(h, b.p) * std::pow(std::log(1.0 / h), static_cast<double>(b.q));
}

bool terms_are_ordered(const std::vector<BetaSpec>& betas) {
  for (std::size_t t = 1; t < betas.size(); ++t) {
    double prev = INFINITY;
    for (int e = 4; e <= 20; ++e) {
      double h = std::ldexp(1.0, -e);
      double ratio = std::abs(beta_eval(betas[t], h) / beta_eval(betas[t - 1], h));
      if (!(ratio < prev)) return false;
      prev = ratio;
    }
  }
  return true;
}

MomentarySymbol::MomentarySymbol(CosineSymbol base, std::vector<Term> terms)
    : base_(std::move(base)), terms_(std::move(terms)) {
  std::vector<BetaSpec> betas;
  for (const auto& t : terms_) {
    if (t.first.form == BetaSpec::Form::power_log && t.first.p < 0.0)
      throw std::invalid_argument("momentary symbol: negative h exponent");
    betas.push_back(t.first);
  }
  if (!terms_are_ordered(betas))
    throw std::invalid_argument("momentary symbol: terms are not strictly ordered in h");
}

CosineSymbol MomentarySymbol::instantiate(std::size_t n) const {
  if (n < 1) throw std::invalid_argument("instantiate: n must be >= 1");
  const double h = 1.0 / (static_cast<double>(n) + 1.0);
  CosineSymbol out = base_;
  for (const auto& [beta, sym] : terms_) out = add(out, scale(sym, beta_eval(beta, h)));
  return out;
}

MomentarySymbol fn_family(double alpha1, double alpha0) {
  return MomentarySymbol(laplacian_power(2),
                         {{BetaSpec::power(1.0, 2.0), scale(laplacian_power(1), alpha1)},
                          {BetaSpec::power(1.0, 4.0), scale(laplacian_power(0), alpha0)}});
}

}  // namespace tspec
