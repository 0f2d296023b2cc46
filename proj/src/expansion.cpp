#include "tspec/expansion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tspec/parallel.hpp"

namespace tspec {

namespace {

// η and η' of one symbol at one angle.
struct EtaPair {
  double eta, prime;
};

EtaPair eta_pair(const PVQuadrature& q, const CosineSymbol& f, double s) {
  return {q.eta(f, s), q.eta_prime(f, s)};
}

std::pair<double, double> c12_at(const PVQuadrature& q, const CosineSymbol& f, double s) {
  const EtaPair e = eta_pair(q, f, s);
  const double f1 = f.derivative(s, 1), f2 = f.derivative(s, 2);
  return {-f1 * e.eta, 0.5 * f2 * e.eta * e.eta + f1 * e.eta * e.prime};
}

std::pair<double, double> q12_at(const PVQuadrature& q, const CosineSymbol& f,
                                 const CosineSymbol& g, double s) {
  const CosineSymbol fg = add(f, g);
  const EtaPair ef = eta_pair(q, f, s), eg = eta_pair(q, g, s), ed = eta_pair(q, fg, s);
  const double f1 = f.derivative(s, 1), f2 = f.derivative(s, 2);
  const double g1 = g.derivative(s, 1), g2 = g.derivative(s, 2);
  const double q1 = f1 * (ef.eta - ed.eta) + g1 * (eg.eta - ed.eta);
  const double q2 = 0.5 * f2 * (ed.eta * ed.eta - ef.eta * ef.eta) +
                    0.5 * g2 * (ed.eta * ed.eta - eg.eta * eg.eta) +
                    f1 * (ed.eta * ed.prime - ef.eta * ef.prime) +
                    g1 * (ed.eta * ed.prime - eg.eta * eg.prime);
  return {q1, q2};
}

std::pair<double, double> psi12_at(const PVQuadrature& q, const CosineSymbol& f,
                                   const CosineSymbol& g, double s) {
  const EtaPair ef = eta_pair(q, f, s);
  const double ps = q.psi(f, g, s);
  const double f1 = f.derivative(s, 1), f2 = f.derivative(s, 2);
  const double g1 = g.derivative(s, 1);
  return {g(s) - f1 * ef.eta,
          0.5 * f2 * ef.eta * ef.eta + f1 * ef.eta * ef.prime - f1 * ps - g1 * ef.eta};
}

Gammas gammas_at(const PVQuadrature& q, const CosineSymbol& f, const CosineSymbol& g, double s) {
  const CosineSymbol fg = add(f, g);
  const EtaPair ed = eta_pair(q, fg, s);
  const double ph = q.phi(f, g, s);
  const double d1 = f.derivative(s, 1) + g.derivative(s, 1);
  const double d2 = f.derivative(s, 2) + g.derivative(s, 2);
  const double g1 = g.derivative(s, 1);
  Gammas out;
  out.g11 = g(s);
  out.g10 = -ed.eta * d1;
  out.g22 = 0.5 * g(s);
  out.g21 = -ph * d1 - g1 * ed.eta;
  out.g20 = 0.5 * ed.eta * ed.eta * d2 + ed.eta * ed.prime * d1;
  return out;
}

// Second- and third-term corrections at angle s for step h.
std::pair<double, double> corrections(ExpansionKind kind, const PVQuadrature& q,
                                      const CosineSymbol& f, const CosineSymbol& g, double s,
                                      double h) {
  switch (kind) {
    case ExpansionKind::single: {
      auto [a, b] = c12_at(q, f, s);
      return {a * h, b * h * h};
    }
    case ExpansionKind::sum: {
      auto [a, b] = q12_at(q, f, g, s);
      return {a * h, b * h * h};
    }
    case ExpansionKind::linear_h: {
      auto [a, b] = psi12_at(q, f, g, s);
      return {a * h, b * h * h};
    }
    case ExpansionKind::h_to_h: {
      const Gammas G = gammas_at(q, f, g, s);
      const double L = std::log(h);
      return {G.g11 * h * L + G.g10 * h,
              G.g22 * h * h * L * L + G.g21 * h * h * L + G.g20 * h * h};
    }
  }
  throw std::invalid_argument("unknown expansion kind");
}

void check_k(int k, int kmax) {
  if (k < 1 || k > kmax)
    throw std::invalid_argument("term count k must lie in 1.." + std::to_string(kmax));
}

}  // namespace

ExpansionKind parse_kind(const std::string& name) {
  if (name == "single") return ExpansionKind::single;
  if (name == "sum") return ExpansionKind::sum;
  if (name == "linear_h" || name == "linear-h") return ExpansionKind::linear_h;
  if (name == "h_to_h" || name == "h-to-h") return ExpansionKind::h_to_h;
  throw std::invalid_argument("unknown expansion kind '" + name + "'");
}

const char* kind_name(ExpansionKind kind) {
  switch (kind) {
    case ExpansionKind::single: return "single";
    case ExpansionKind::sum: return "sum";
    case ExpansionKind::linear_h: return "linear_h";
    case ExpansionKind::h_to_h: return "h_to_h";
  }
  return "?";
}

std::pair<double, double> c12(const CosineSymbol& f, double s, const PVConfig& cfg) {
  return c12_at(PVQuadrature(cfg), f, s);
}

std::pair<double, double> q12(const CosineSymbol& f, const CosineSymbol& g, double s,
                              const PVConfig& cfg) {
  return q12_at(PVQuadrature(cfg), f, g, s);
}

std::pair<double, double> psi12(const CosineSymbol& f, const CosineSymbol& g, double s,
                                const PVConfig& cfg) {
  return psi12_at(PVQuadrature(cfg), f, g, s);
}

Gammas gammas(const CosineSymbol& f, const CosineSymbol& g, double s, const PVConfig& cfg) {
  return gammas_at(PVQuadrature(cfg), f, g, s);
}

CosineSymbol target_symbol(ExpansionKind kind, const CosineSymbol& f, const CosineSymbol& g,
                           std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double h = 1.0 / (static_cast<double>(n) + 1.0);
  switch (kind) {
    case ExpansionKind::single: return f;
    case ExpansionKind::sum: return add(f, g);
    case ExpansionKind::linear_h: return add(f, scale(g, h));
    case ExpansionKind::h_to_h: return add(f, scale(g, std::pow(h, h)));
  }
  throw std::invalid_argument("unknown expansion kind");
}

std::vector<double> exact_eigenvalues(ExpansionKind kind, const CosineSymbol& f,
                                      const CosineSymbol& g, std::size_t n,
                                      const EigenOptions& eig) {
  return toeplitz_eigenvalues(target_symbol(kind, f, g, n), n, eig);
}

std::array<std::vector<double>, 3> approx_eigenvalues_all(ExpansionKind kind,
                                                          const CosineSymbol& f,
                                                          const CosineSymbol& g, std::size_t n,
                                                          const PVConfig& cfg,
                                                          const EigenOptions& eig) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const PVQuadrature q(cfg);
  const double h = 1.0 / (static_cast<double>(n) + 1.0);
  std::vector<double> base(n);
  if (kind == ExpansionKind::sum) {
    const auto lf = toeplitz_eigenvalues(f, n, eig);
    const auto lg = toeplitz_eigenvalues(g, n, eig);
    for (std::size_t j = 0; j < n; ++j) base[j] = lf[j] + lg[j];
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      double d = std::numbers::pi * static_cast<double>(j + 1) * h;
      base[j] = kind == ExpansionKind::h_to_h ? f(d) + g(d) : f(d);
    }
  }
  std::array<std::vector<double>, 3> out{base, base, base};
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      double d = std::numbers::pi * static_cast<double>(j + 1) * h;
      auto [t1, t2] = corrections(kind, q, f, g, d, h);
      out[1][j] += t1;
      out[2][j] += t1 + t2;
    }
  });
  return out;
}

std::vector<double> approx_eigenvalues(ExpansionKind kind, const CosineSymbol& f,
                                       const CosineSymbol& g, std::size_t n, int k,
                                       const PVConfig& cfg, const EigenOptions& eig) {
  check_k(k, 3);
  auto all = approx_eigenvalues_all(kind, f, g, n, cfg, eig);
  return std::move(all[static_cast<std::size_t>(k - 1)]);
}

ErrorReport error_report(const std::vector<double>& exact, const std::vector<double>& approx,
                         ExpansionKind kind, int k, std::size_t n) {
  if (exact.size() != approx.size()) throw std::invalid_argument("error_report: length mismatch");
  if (k < 1) throw std::invalid_argument("error_report: k must be >= 1");
  ErrorReport r;
  r.k = k;
  r.n = n;
  r.per_j.resize(exact.size());
  for (std::size_t j = 0; j < exact.size(); ++j) {
    r.per_j[j] = exact[j] - approx[j];
    r.max_error = std::max(r.max_error, std::abs(r.per_j[j]));
  }
  const double np1 = static_cast<double>(n) + 1.0;
  double factor = std::pow(np1, k);
  if (kind == ExpansionKind::h_to_h) factor /= std::pow(std::log(np1), k);
  r.normalized_max = factor * r.max_error;
  return r;
}

double correction_curve(ExpansionKind kind, const CosineSymbol& f, const CosineSymbol& g, int k,
                        double s, std::size_t n, const PVConfig& cfg) {
  check_k(k, 2);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const PVQuadrature q(cfg);
  const double np1 = static_cast<double>(n) + 1.0;
  const double h = 1.0 / np1;
  auto [t1, t2] = corrections(kind, q, f, g, s, h);
  double factor = std::pow(np1, k);
  if (kind == ExpansionKind::h_to_h) factor /= std::pow(std::log(np1), k);
  return (k == 1 ? t1 : t2) * factor;
}

}  // namespace tspec
