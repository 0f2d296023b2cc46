#include "tspec/tspec.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "tspec/errors.hpp"
#include "tspec/expansion.hpp"
#include "tspec/matrixless.hpp"
#include "tspec/momentary.hpp"
#include "tspec/parallel.hpp"
#include "tspec/quadrature.hpp"
#include "tspec/symbol.hpp"
#include "tspec/toeplitz.hpp"

struct tspec_symbol {
  tspec::CosineSymbol value;
};

struct tspec_momentary {
  tspec::CosineSymbol base;
  std::vector<tspec::MomentarySymbol::Term> terms;
  tspec::MomentarySymbol make() const { return tspec::MomentarySymbol(base, terms); }
};

struct tspec_grid {
  tspec::CoefficientGrid value;
};

namespace {

thread_local std::string g_last_error;

struct ArgumentError {
  const char* what;
};

template <class F>
int guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return TSPEC_OK;
  } catch (const ArgumentError& e) {
    g_last_error = e.what;
    return TSPEC_INVALID_ARGUMENT;
  } catch (const tspec::DomainError& e) {
    g_last_error = e.what();
    return TSPEC_DOMAIN;
  } catch (const tspec::ConvergenceError& e) {
    g_last_error = e.what();
    return TSPEC_NOT_CONVERGED;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return TSPEC_INVALID_ARGUMENT;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return TSPEC_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TSPEC_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TSPEC_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TSPEC_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw ArgumentError{name};
}

tspec::PVConfig pv(const tspec_pv_config* cfg) {
  tspec::PVConfig c;
  if (cfg) {
    c.nodes = cfg->nodes;
    c.exclusion_radius = cfg->exclusion_radius;
    c.fd_step = cfg->fd_step;
  }
  c.validate();
  return c;
}

tspec::ExpansionKind kind_of(int kind) {
  switch (kind) {
    case TSPEC_KIND_SINGLE: return tspec::ExpansionKind::single;
    case TSPEC_KIND_SUM: return tspec::ExpansionKind::sum;
    case TSPEC_KIND_LINEAR_H: return tspec::ExpansionKind::linear_h;
    case TSPEC_KIND_H_TO_H: return tspec::ExpansionKind::h_to_h;
  }
  throw ArgumentError{"unknown expansion kind"};
}

tspec::BetaSpec beta_of(int form, double c, double p, unsigned q) {
  if (form == TSPEC_BETA_POWER_LOG) return tspec::BetaSpec::power(c, p, q);
  if (form == TSPEC_BETA_H_TO_H) return tspec::BetaSpec::h_to_h();
  throw ArgumentError{"unknown beta form"};
}

// Second symbol, defaulting to zero where the kind does not use it.
const tspec::CosineSymbol& second(int kind, const tspec_symbol* g) {
  static const tspec::CosineSymbol zero;
  if (g) return g->value;
  if (kind == TSPEC_KIND_SINGLE) return zero;
  throw ArgumentError{"second symbol g is required for this kind"};
}

tspec_symbol* wrap(tspec::CosineSymbol s) { return new tspec_symbol{std::move(s)}; }

void summarize(const tspec::ErrorReport& r, double* per_j, tspec_error_summary* out) {
  if (per_j) std::memcpy(per_j, r.per_j.data(), r.per_j.size() * sizeof(double));
  out->max_error = r.max_error;
  out->normalized_max = r.normalized_max;
  out->k = r.k;
  out->n = r.n;
}

}  // namespace

extern "C" {

const char* tspec_version(void) { return "0.1.0"; }

const char* tspec_last_error(void) { return g_last_error.c_str(); }

const char* tspec_status_string(int status) {
  switch (status) {
    case TSPEC_OK: return "ok";
    case TSPEC_INVALID_ARGUMENT: return "invalid argument";
    case TSPEC_DOMAIN: return "numerical domain error";
    case TSPEC_NOT_CONVERGED: return "not converged";
    case TSPEC_BUFFER_TOO_SMALL: return "buffer too small";
    case TSPEC_IO: return "i/o error";
    case TSPEC_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void tspec_set_threads(int count) { tspec::set_thread_count(count); }
int tspec_get_threads(void) { return tspec::thread_count(); }

void tspec_pv_config_default(tspec_pv_config* cfg) {
  if (!cfg) return;
  tspec::PVConfig d;
  cfg->nodes = d.nodes;
  cfg->exclusion_radius = d.exclusion_radius;
  cfg->fd_step = d.fd_step;
}

int tspec_symbol_create(const double* coeffs, size_t count, tspec_symbol** out) {
  return guarded([&] {
    require(out, "out is null");
    if (count > 0) require(coeffs, "coeffs is null");
    *out = wrap(tspec::CosineSymbol(std::vector<double>(coeffs, coeffs + count)));
  });
}

int tspec_symbol_laplacian_power(unsigned q, tspec_symbol** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = wrap(tspec::laplacian_power(q));
  });
}

int tspec_symbol_kms(double rho, double tol, tspec_symbol** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = wrap(tspec::kms(rho, tol));
  });
}

int tspec_symbol_from_text(const char* text, tspec_symbol** out) {
  return guarded([&] {
    require(text, "text is null");
    require(out, "out is null");
    *out = wrap(tspec::CosineSymbol::from_text(text));
  });
}

int tspec_symbol_load(const char* path, tspec_symbol** out) {
  return guarded([&] {
    require(path, "path is null");
    require(out, "out is null");
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure(std::string("cannot open ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    *out = wrap(tspec::CosineSymbol::from_text(buf.str()));
  });
}

int tspec_symbol_save(const tspec_symbol* s, const char* path) {
  return guarded([&] {
    require(s, "symbol is null");
    require(path, "path is null");
    std::ofstream o(path);
    if (!o) throw std::ios_base::failure(std::string("cannot write ") + path);
    o << s->value.to_text();
    if (!o) throw std::ios_base::failure(std::string("write failed: ") + path);
  });
}

int tspec_symbol_clone(const tspec_symbol* s, tspec_symbol** out) {
  return guarded([&] {
    require(s, "symbol is null");
    require(out, "out is null");
    *out = wrap(s->value);
  });
}

void tspec_symbol_free(tspec_symbol* s) { delete s; }

int tspec_symbol_bandwidth(const tspec_symbol* s, size_t* out) {
  return guarded([&] {
    require(s, "symbol is null");
    require(out, "out is null");
    *out = s->value.bandwidth();
  });
}

int tspec_symbol_coeffs(const tspec_symbol* s, double* buf, size_t cap, size_t* count) {
  int rc = guarded([&] {
    require(s, "symbol is null");
    require(count, "count is null");
    const auto& c = s->value.coeffs();
    *count = c.size();
    if (cap > 0) require(buf, "buf is null");
    std::memcpy(buf, c.data(), std::min(cap, c.size()) * sizeof(double));
  });
  if (rc == TSPEC_OK && cap < s->value.coeffs().size()) {
    g_last_error = "coefficient buffer too small";
    return TSPEC_BUFFER_TOO_SMALL;
  }
  return rc;
}

int tspec_symbol_eval(const tspec_symbol* s, double theta, double* out) {
  return guarded([&] {
    require(s, "symbol is null");
    require(out, "out is null");
    *out = s->value(theta);
  });
}

int tspec_symbol_derivative(const tspec_symbol* s, double theta, int order, double* out) {
  return guarded([&] {
    require(s, "symbol is null");
    require(out, "out is null");
    *out = s->value.derivative(theta, order);
  });
}

int tspec_symbol_add(const tspec_symbol* a, const tspec_symbol* b, tspec_symbol** out) {
  return guarded([&] {
    require(a, "a is null");
    require(b, "b is null");
    require(out, "out is null");
    *out = wrap(tspec::add(a->value, b->value));
  });
}

int tspec_symbol_scale(const tspec_symbol* a, double c, tspec_symbol** out) {
  return guarded([&] {
    require(a, "a is null");
    require(out, "out is null");
    *out = wrap(tspec::scale(a->value, c));
  });
}

int tspec_symbol_multiply(const tspec_symbol* a, const tspec_symbol* b, tspec_symbol** out) {
  return guarded([&] {
    require(a, "a is null");
    require(b, "b is null");
    require(out, "out is null");
    *out = wrap(tspec::multiply(a->value, b->value));
  });
}

int tspec_symbol_wiener_norm(const tspec_symbol* s, double alpha, double* out) {
  return guarded([&] {
    require(s, "symbol is null");
    require(out, "out is null");
    *out = tspec::wiener_norm(s->value, alpha);
  });
}

int tspec_symbol_simple_loop_check(const tspec_symbol* s, size_t grid_size, double tol,
                                   tspec_simple_loop_report* out) {
  return guarded([&] {
    require(s, "symbol is null");
    require(out, "out is null");
    auto r = tspec::simple_loop_check(s->value, grid_size, tol);
    out->range_min = r.range_min;
    out->range_max = r.range_max;
    out->endpoint_value = r.endpoint_value;
    out->endpoint_slope = r.endpoint_slope;
    out->endpoint_curvature = r.endpoint_curvature;
    out->peak_curvature = r.peak_curvature;
    out->monotone_on_half_period = r.monotone_on_half_period ? 1 : 0;
    out->is_simple_loop = r.is_simple_loop ? 1 : 0;
  });
}

int tspec_beta_eval(int form, double c, double p, unsigned q, double h, double* out) {
  return guarded([&] {
    require(out, "out is null");
    *out = tspec::beta_eval(beta_of(form, c, p, q), h);
  });
}

int tspec_momentary_create(const tspec_symbol* base, tspec_momentary** out) {
  return guarded([&] {
    require(base, "base is null");
    require(out, "out is null");
    *out = new tspec_momentary{base->value, {}};
  });
}

int tspec_momentary_add_term(tspec_momentary* ms, int form, double c, double p, unsigned q,
                             const tspec_symbol* sym) {
  return guarded([&] {
    require(ms, "momentary symbol is null");
    require(sym, "term symbol is null");
    auto terms = ms->terms;
    terms.emplace_back(beta_of(form, c, p, q), sym->value);
    tspec::MomentarySymbol check(ms->base, terms);
    ms->terms = std::move(terms);
  });
}

int tspec_momentary_fn_family(double alpha1, double alpha0, tspec_momentary** out) {
  return guarded([&] {
    require(out, "out is null");
    auto ms = tspec::fn_family(alpha1, alpha0);
    *out = new tspec_momentary{ms.base(), ms.terms()};
  });
}

int tspec_momentary_instantiate(const tspec_momentary* ms, size_t n, tspec_symbol** out) {
  return guarded([&] {
    require(ms, "momentary symbol is null");
    require(out, "out is null");
    *out = wrap(ms->make().instantiate(n));
  });
}

void tspec_momentary_free(tspec_momentary* ms) { delete ms; }

int tspec_toeplitz_eigenvalues(const tspec_symbol* s, size_t n, double tol, double* out) {
  return guarded([&] {
    require(s, "symbol is null");
    require(out, "out is null");
    tspec::EigenOptions opts;
    opts.tol = tol;
    auto ev = tspec::toeplitz_eigenvalues(s->value, n, opts);
    std::memcpy(out, ev.data(), ev.size() * sizeof(double));
  });
}

int tspec_toeplitz_count_below(const tspec_symbol* s, size_t n, double x, size_t* out) {
  return guarded([&] {
    require(s, "symbol is null");
    require(out, "out is null");
    *out = tspec::eigenvalue_count_below(tspec::SymmetricBandedToeplitz::build(s->value, n), x);
  });
}

int tspec_b_eval(const tspec_symbol* f, double sigma, double s, double* out) {
  return guarded([&] {
    require(f, "symbol is null");
    require(out, "out is null");
    *out = tspec::b_eval(f->value, sigma, s);
  });
}

int tspec_curve_eval(int curve, const tspec_symbol* f, const tspec_symbol* g, const double* s,
                     size_t count, const tspec_pv_config* cfg, double* out) {
  return guarded([&] {
    require(f, "symbol f is null");
    if (count > 0) {
      require(s, "angles are null");
      require(out, "out is null");
    }
    if ((curve == TSPEC_CURVE_PSI || curve == TSPEC_CURVE_PHI) && !g)
      throw ArgumentError{"symbol g is required for psi and phi"};
    if (curve < TSPEC_CURVE_ETA || curve > TSPEC_CURVE_PHI) throw ArgumentError{"unknown curve"};
    const tspec::PVQuadrature q(pv(cfg));
    tspec::parallel_for(count, [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) {
        switch (curve) {
          case TSPEC_CURVE_ETA: out[i] = q.eta(f->value, s[i]); break;
          case TSPEC_CURVE_ETA_PRIME: out[i] = q.eta_prime(f->value, s[i]); break;
          case TSPEC_CURVE_PSI: out[i] = q.psi(f->value, g->value, s[i]); break;
          default: out[i] = q.phi(f->value, g->value, s[i]); break;
        }
      }
    });
  });
}

int tspec_pv_unit_integral(double s, const tspec_pv_config* cfg, double* out) {
  return guarded([&] {
    require(out, "out is null");
    *out = tspec::pv_unit_integral(s, pv(cfg));
  });
}

int tspec_c12(const tspec_symbol* f, double s, const tspec_pv_config* cfg, double out[2]) {
  return guarded([&] {
    require(f, "symbol is null");
    require(out, "out is null");
    auto [a, b] = tspec::c12(f->value, s, pv(cfg));
    out[0] = a;
    out[1] = b;
  });
}

int tspec_q12(const tspec_symbol* f, const tspec_symbol* g, double s, const tspec_pv_config* cfg,
              double out[2]) {
  return guarded([&] {
    require(f, "symbol f is null");
    require(g, "symbol g is null");
    require(out, "out is null");
    auto [a, b] = tspec::q12(f->value, g->value, s, pv(cfg));
    out[0] = a;
    out[1] = b;
  });
}

int tspec_psi12(const tspec_symbol* f, const tspec_symbol* g, double s,
                const tspec_pv_config* cfg, double out[2]) {
  return guarded([&] {
    require(f, "symbol f is null");
    require(g, "symbol g is null");
    require(out, "out is null");
    auto [a, b] = tspec::psi12(f->value, g->value, s, pv(cfg));
    out[0] = a;
    out[1] = b;
  });
}

int tspec_gammas(const tspec_symbol* f, const tspec_symbol* g, double s,
                 const tspec_pv_config* cfg, double out[5]) {
  return guarded([&] {
    require(f, "symbol f is null");
    require(g, "symbol g is null");
    require(out, "out is null");
    auto G = tspec::gammas(f->value, g->value, s, pv(cfg));
    out[0] = G.g11;
    out[1] = G.g10;
    out[2] = G.g22;
    out[3] = G.g21;
    out[4] = G.g20;
  });
}

int tspec_exact_eigenvalues(int kind, const tspec_symbol* f, const tspec_symbol* g, size_t n,
                            double* out) {
  return guarded([&] {
    require(f, "symbol f is null");
    require(out, "out is null");
    auto ev = tspec::exact_eigenvalues(kind_of(kind), f->value, second(kind, g), n);
    std::memcpy(out, ev.data(), ev.size() * sizeof(double));
  });
}

int tspec_approx_eigenvalues(int kind, const tspec_symbol* f, const tspec_symbol* g, size_t n,
                             int k, const tspec_pv_config* cfg, double* out) {
  return guarded([&] {
    require(f, "symbol f is null");
    require(out, "out is null");
    auto ev = tspec::approx_eigenvalues(kind_of(kind), f->value, second(kind, g), n, k, pv(cfg));
    std::memcpy(out, ev.data(), ev.size() * sizeof(double));
  });
}

int tspec_approx_eigenvalues_all(int kind, const tspec_symbol* f, const tspec_symbol* g,
                                 size_t n, const tspec_pv_config* cfg, double* out_k1,
                                 double* out_k2, double* out_k3) {
  return guarded([&] {
    require(f, "symbol f is null");
    require(out_k1, "out_k1 is null");
    require(out_k2, "out_k2 is null");
    require(out_k3, "out_k3 is null");
    auto all = tspec::approx_eigenvalues_all(kind_of(kind), f->value, second(kind, g), n, pv(cfg));
    double* outs[3] = {out_k1, out_k2, out_k3};
    for (int i = 0; i < 3; ++i) std::memcpy(outs[i], all[i].data(), n * sizeof(double));
  });
}

int tspec_error_report(const double* exact, const double* approx, size_t n, int kind, int k,
                       double* per_j, tspec_error_summary* out) {
  return guarded([&] {
    require(out, "out is null");
    if (n > 0) {
      require(exact, "exact is null");
      require(approx, "approx is null");
    }
    auto r = tspec::error_report(std::vector<double>(exact, exact + n),
                                 std::vector<double>(approx, approx + n), kind_of(kind), k, n);
    summarize(r, per_j, out);
  });
}

int tspec_correction_curve(int kind, const tspec_symbol* f, const tspec_symbol* g, int k,
                           double s, size_t n, const tspec_pv_config* cfg, double* out) {
  return guarded([&] {
    require(f, "symbol f is null");
    require(out, "out is null");
    *out = tspec::correction_curve(kind_of(kind), f->value, second(kind, g), k, s, n, pv(cfg));
  });
}

int tspec_grid_extrapolate(const tspec_momentary* ms, size_t n0, int k, tspec_grid** out) {
  return guarded([&] {
    require(ms, "momentary symbol is null");
    require(out, "out is null");
    *out = new tspec_grid{tspec::extrapolate(ms->make(), n0, k)};
  });
}

void tspec_grid_free(tspec_grid* grid) { delete grid; }

int tspec_grid_info(const tspec_grid* grid, size_t* n0, int* k) {
  return guarded([&] {
    require(grid, "grid is null");
    if (n0) *n0 = grid->value.n0;
    if (k) *k = grid->value.k;
  });
}

int tspec_grid_values(const tspec_grid* grid, int ell, double* buf, size_t cap) {
  int rc = guarded([&] {
    require(grid, "grid is null");
    if (ell < 1 || ell > grid->value.k - 1) throw ArgumentError{"coefficient index out of range"};
    if (cap > 0) require(buf, "buf is null");
    const auto& v = grid->value.values[static_cast<size_t>(ell - 1)];
    std::memcpy(buf, v.data(), std::min(cap, v.size()) * sizeof(double));
  });
  if (rc == TSPEC_OK && cap < grid->value.n0) {
    g_last_error = "value buffer too small";
    return TSPEC_BUFFER_TOO_SMALL;
  }
  return rc;
}

int tspec_grid_set_boundary(tspec_grid* grid, const double* at_zero, const double* at_pi,
                            size_t count) {
  return guarded([&] {
    require(grid, "grid is null");
    if (count == 0) {
      grid->value.boundary.reset();
      return;
    }
    require(at_zero, "at_zero is null");
    require(at_pi, "at_pi is null");
    if (count + 1 != static_cast<size_t>(grid->value.k))
      throw ArgumentError{"boundary needs exactly k-1 values"};
    std::vector<tspec::EndpointValues> b(count);
    for (size_t i = 0; i < count; ++i) b[i] = {at_zero[i], at_pi[i]};
    grid->value.boundary = std::move(b);
  });
}

int tspec_boundary_values(double alpha1, double alpha0, int k, double* at_zero, double* at_pi) {
  return guarded([&] {
    require(at_zero, "at_zero is null");
    require(at_pi, "at_pi is null");
    auto b = tspec::boundary_values(alpha1, alpha0, k);
    for (size_t i = 0; i < b.size(); ++i) {
      at_zero[i] = b[i].at_zero;
      at_pi[i] = b[i].at_pi;
    }
  });
}

int tspec_grid_interpolate(const tspec_grid* grid, int ell, double theta, int degree,
                           double* out) {
  return guarded([&] {
    require(grid, "grid is null");
    require(out, "out is null");
    *out = tspec::interpolate(grid->value, ell, theta, degree);
  });
}

int tspec_grid_predict(const tspec_momentary* ms, const tspec_grid* grid, size_t n, int k,
                       int degree, double* out) {
  return guarded([&] {
    require(ms, "momentary symbol is null");
    require(grid, "grid is null");
    require(out, "out is null");
    auto p = tspec::predict(ms->make(), grid->value, n, k, degree);
    std::memcpy(out, p.data(), p.size() * sizeof(double));
  });
}

int tspec_grid_validate(const tspec_momentary* ms, const tspec_grid* grid, size_t n, int k,
                        int degree, double* per_j, tspec_error_summary* out) {
  return guarded([&] {
    require(ms, "momentary symbol is null");
    require(grid, "grid is null");
    require(out, "out is null");
    summarize(tspec::validate(ms->make(), grid->value, n, k, degree), per_j, out);
  });
}

int tspec_prediction_report(const double* exact, const double* pred, size_t n, size_t n0, int k,
                            double* per_j, tspec_error_summary* out) {
  return guarded([&] {
    require(out, "out is null");
    if (n > 0) {
      require(exact, "exact is null");
      require(pred, "pred is null");
    }
    summarize(tspec::prediction_report(std::vector<double>(exact, exact + n),
                                       std::vector<double>(pred, pred + n), n0, n, k),
              per_j, out);
  });
}

}  // extern "C"
