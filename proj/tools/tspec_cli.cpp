// Command-line front end over the C interface.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tspec/tspec.h"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
// Largest reference-spectrum size run without --allow-large.
constexpr std::size_t kBudget = 16384;

struct Failure {
  int code;
  std::string message;
};

void check(int status) {
  if (status == TSPEC_OK) return;
  int code = 1;
  if (status == TSPEC_DOMAIN || status == TSPEC_NOT_CONVERGED) code = kExitNumeric;
  if (status == TSPEC_INVALID_ARGUMENT || status == TSPEC_IO || status == TSPEC_BUFFER_TOO_SMALL)
    code = kExitConfig;
  throw Failure{code, std::string(tspec_status_string(status)) + ": " + tspec_last_error()};
}

[[noreturn]] void config_error(const std::string& msg) { throw Failure{kExitConfig, msg}; }

using Symbol = std::unique_ptr<tspec_symbol, decltype(&tspec_symbol_free)>;
using Momentary = std::unique_ptr<tspec_momentary, decltype(&tspec_momentary_free)>;
using Grid = std::unique_ptr<tspec_grid, decltype(&tspec_grid_free)>;

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) config_error("bad number '" + text + "' in " + what);
  return v;
}

// laplacian | lappow:q | kms:rho | const:c | coeffs:a,b,... | file:path
Symbol make_symbol(const std::string& spec) {
  tspec_symbol* out = nullptr;
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "laplacian" && arg.empty()) {
    check(tspec_symbol_laplacian_power(1, &out));
  } else if (name == "lappow" && !arg.empty()) {
    double q = parse_number(arg, spec);
    if (q < 0 || q != std::floor(q) || q > 64) config_error("lappow needs an integer 0..64");
    check(tspec_symbol_laplacian_power(static_cast<unsigned>(q), &out));
  } else if (name == "kms" && !arg.empty()) {
    check(tspec_symbol_kms(parse_number(arg, spec), 1e-14, &out));
  } else if (name == "const" && !arg.empty()) {
    double c = parse_number(arg, spec);
    check(tspec_symbol_create(&c, 1, &out));
  } else if (name == "coeffs" && !arg.empty()) {
    std::vector<double> c;
    std::size_t start = 0;
    while (start <= arg.size()) {
      auto comma = arg.find(',', start);
      if (comma == std::string::npos) comma = arg.size();
      c.push_back(parse_number(arg.substr(start, comma - start), spec));
      start = comma + 1;
    }
    check(tspec_symbol_create(c.data(), c.size(), &out));
  } else if (name == "file" && !arg.empty()) {
    check(tspec_symbol_load(arg.c_str(), &out));
  } else {
    config_error("unknown symbol '" + spec +
                 "' (expected laplacian, lappow:q, kms:rho, const:c, coeffs:a,b,.. or file:path)");
  }
  return Symbol(out, &tspec_symbol_free);
}

void require_simple_loop(const tspec_symbol* s, const std::string& label) {
  tspec_simple_loop_report r;
  check(tspec_symbol_simple_loop_check(s, 4096, 1e-8, &r));
  if (!r.is_simple_loop)
    throw Failure{kExitNumeric, label + " is not a simple-loop symbol"};
}

class Csv {
 public:
  explicit Csv(const std::string& path) {
    if (path.empty() || path == "-") {
      out_ = stdout;
    } else {
      out_ = std::fopen(path.c_str(), "w");
      if (!out_) config_error("cannot write " + path);
      owned_ = true;
    }
  }
  ~Csv() {
    if (owned_) std::fclose(out_);
  }
  Csv(const Csv&) = delete;
  Csv& operator=(const Csv&) = delete;

  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      std::fprintf(out_, "%s%s", i ? "," : "", cols[i].c_str());
    std::fputc('\n', out_);
  }
  void row(const std::vector<double>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) std::fprintf(out_, "%s%.17g", i ? "," : "", vals[i]);
    std::fputc('\n', out_);
  }

 private:
  std::FILE* out_ = nullptr;
  bool owned_ = false;
};

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      config_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

CLI::Option* find_option(CLI::App& app, const std::string& name) {
  for (CLI::Option* o : app.get_options())
    for (const auto& l : o->get_lnames())
      if (l == name) return o;
  return nullptr;
}

// Fills options not given on the command line from the config file.
void apply_config(CLI::App& app, CLI::App* sub, const std::map<std::string, std::string>& cfg) {
  for (const auto& [key, value] : cfg) {
    std::string name = key;
    for (char& c : name)
      if (c == '.' || c == '_') c = '-';
    CLI::Option* opt = sub ? find_option(*sub, name) : nullptr;
    if (!opt) opt = find_option(app, name);
    if (!opt) {
      bool elsewhere = false;
      for (CLI::App* other : app.get_subcommands({}))
        elsewhere = elsewhere || find_option(*other, name);
      if (!elsewhere) config_error("unknown config key '" + key + "'");
      continue;
    }
    if (opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

struct QuadOptions {
  std::size_t nodes = 0;
  double delta = 0.0, fd_step = 0.0;

  void add(CLI::App* app) {
    tspec_pv_config d;
    tspec_pv_config_default(&d);
    nodes = d.nodes;
    delta = d.exclusion_radius;
    fd_step = d.fd_step;
    app->add_option("--quad-nodes", nodes, "quadrature nodes M")->capture_default_str();
    app->add_option("--quad-delta", delta, "exclusion radius around the singular node")
        ->capture_default_str();
    app->add_option("--quad-fd-step", fd_step, "finite-difference step for eta'")
        ->capture_default_str();
  }
  tspec_pv_config config() const { return {nodes, delta, fd_step}; }
};

void within_budget(std::size_t n, bool allow_large) {
  if (n < 1) config_error("n must be >= 1");
  if (n > kBudget && !allow_large)
    config_error("refusing n = " + std::to_string(n) + ": the reference solver budget is n <= " +
                 std::to_string(kBudget) + " (pass --allow-large to override)");
}

int kind_from(const std::string& name) {
  if (name == "single") return TSPEC_KIND_SINGLE;
  if (name == "sum") return TSPEC_KIND_SUM;
  if (name == "linear_h" || name == "linear-h") return TSPEC_KIND_LINEAR_H;
  if (name == "h_to_h" || name == "h-to-h") return TSPEC_KIND_H_TO_H;
  config_error("unknown kind '" + name + "' (single, sum, linear_h, h_to_h)");
}

double normalization(int kind, int k, std::size_t n) {
  const double np1 = static_cast<double>(n) + 1.0;
  double f = std::pow(np1, k);
  if (kind == TSPEC_KIND_H_TO_H) f /= std::pow(std::log(np1), k);
  return f;
}

double mesh(std::size_t j, std::size_t n) {
  return kPi * static_cast<double>(j) / (static_cast<double>(n) + 1.0);
}

// Expansion inputs shared by expand, table and plotdata.
struct Pair {
  Symbol f{nullptr, &tspec_symbol_free};
  Symbol g{nullptr, &tspec_symbol_free};
};

Pair load_pair(int kind, const std::string& f, const std::string& g) {
  Pair p;
  if (f.empty()) config_error("--f is required");
  p.f = make_symbol(f);
  require_simple_loop(p.f.get(), "f");
  if (kind != TSPEC_KIND_SINGLE) {
    if (g.empty()) config_error("--g is required for this kind");
    p.g = make_symbol(g);
    require_simple_loop(p.g.get(), "g");
  } else if (!g.empty()) {
    p.g = make_symbol(g);
  }
  return p;
}

struct Summary {
  double max_error, normalized;
};

// Rows of the error table for one kind at one n, k = 1..3.
std::vector<Summary> expansion_errors(int kind, const Pair& p, std::size_t n,
                                      const tspec_pv_config& q) {
  std::vector<double> ex(n), a1(n), a2(n), a3(n);
  check(tspec_exact_eigenvalues(kind, p.f.get(), p.g.get(), n, ex.data()));
  check(tspec_approx_eigenvalues_all(kind, p.f.get(), p.g.get(), n, &q, a1.data(), a2.data(),
                                     a3.data()));
  std::vector<Summary> out;
  const std::vector<double>* ap[3] = {&a1, &a2, &a3};
  for (int k = 1; k <= 3; ++k) {
    tspec_error_summary s;
    check(tspec_error_report(ex.data(), ap[k - 1]->data(), n, kind, k, nullptr, &s));
    out.push_back({s.max_error, s.normalized_max});
  }
  return out;
}

struct FnSetup {
  double alpha1 = 3.0, alpha0 = 2.0;
  std::size_t n0 = 100;
  int k = 4;
  int grid_k = 0;
  int degree = 8;
  bool no_boundary = false;
  // Optional general momentary symbol; the endpoint values are only known for the F_n family.
  std::string base;
  std::vector<std::string> terms;

  void add(CLI::App* app, bool with_alphas) {
    if (with_alphas) {
      app->add_option("--alpha1", alpha1, "coefficient of f1 h^2")->capture_default_str();
      app->add_option("--alpha0", alpha0, "coefficient of f0 h^4")->capture_default_str();
      app->add_option("--base", base, "base symbol spec of a general momentary symbol");
      app->add_option("--term", terms,
                      "momentary term form:c:p:q:symbol with form power_log or h_to_h (repeatable)")
          ->delimiter(';');
    }
    app->add_option("--n0", n0, "sampling mesh size")->capture_default_str();
    app->add_option("--k", k, "number of expansion terms")->capture_default_str();
    app->add_option("--grid-k", grid_k,
                    "terms resolved by the extrapolation (default k + 2, at least 2)");
    app->add_option("--degree", degree, "local interpolation degree")->capture_default_str();
    app->add_flag("--no-boundary", no_boundary, "leave the endpoint values out of interpolation");
  }

  int depth() const {
    if (k < 1) config_error("--k must be >= 1");
    int d = grid_k > 0 ? grid_k : k + 2;
    if (d < 2) d = 2;
    if (d < k) config_error("--grid-k must be >= --k");
    return d;
  }

  Momentary momentary() const {
    tspec_momentary* ms = nullptr;
    if (base.empty()) {
      if (!terms.empty()) config_error("--term needs --base");
      check(tspec_momentary_fn_family(alpha1, alpha0, &ms));
      return Momentary(ms, &tspec_momentary_free);
    }
    Symbol b = make_symbol(base);
    check(tspec_momentary_create(b.get(), &ms));
    Momentary m(ms, &tspec_momentary_free);
    for (const std::string& t : terms) {
      std::vector<std::string> parts;
      std::size_t start = 0;
      for (int i = 0; i < 4; ++i) {
        auto colon = t.find(':', start);
        if (colon == std::string::npos) config_error("bad --term '" + t + "'");
        parts.push_back(t.substr(start, colon - start));
        start = colon + 1;
      }
      parts.push_back(t.substr(start));
      int form = -1;
      if (parts[0] == "power_log" || parts[0] == "power") form = TSPEC_BETA_POWER_LOG;
      if (parts[0] == "h_to_h") form = TSPEC_BETA_H_TO_H;
      if (form < 0) config_error("unknown term form '" + parts[0] + "'");
      double q = parse_number(parts[3], t);
      if (q < 0 || q != std::floor(q)) config_error("term log power must be a non-negative integer");
      Symbol sym = make_symbol(parts[4]);
      check(tspec_momentary_add_term(m.get(), form, parse_number(parts[1], t),
                                     parse_number(parts[2], t), static_cast<unsigned>(q), sym.get()));
    }
    return m;
  }

  std::pair<Momentary, Grid> build() const {
    Momentary m = momentary();
    const int d = depth();
    tspec_grid* g = nullptr;
    check(tspec_grid_extrapolate(m.get(), n0, d, &g));
    Grid grid(g, &tspec_grid_free);
    if (!no_boundary && base.empty()) {
      std::vector<double> z(static_cast<std::size_t>(d - 1)), p(z.size());
      check(tspec_boundary_values(alpha1, alpha0, d, z.data(), p.data()));
      check(tspec_grid_set_boundary(grid.get(), z.data(), p.data(), z.size()));
    }
    return {std::move(m), std::move(grid)};
  }
};

// ε and normalized ε for k = 1..K at each n, as in the matrix-less tables.
void fn_table(Csv& csv, const FnSetup& setup, const std::vector<std::size_t>& ns, bool allow_large) {
  if (ns.empty()) config_error("the n list is empty");
  for (std::size_t n : ns) within_budget(n, allow_large);
  auto [ms, grid] = setup.build();
  std::vector<std::string> cols{"n"};
  for (int k = 1; k <= setup.k; ++k) {
    cols.push_back("eps_k" + std::to_string(k));
    cols.push_back("normalized_k" + std::to_string(k));
  }
  csv.header(cols);
  for (std::size_t n : ns) {
    tspec_symbol* s = nullptr;
    check(tspec_momentary_instantiate(ms.get(), n, &s));
    Symbol sym(s, &tspec_symbol_free);
    std::vector<double> ex(n), pred(n);
    check(tspec_toeplitz_eigenvalues(sym.get(), n, 0.0, ex.data()));
    std::vector<double> row{static_cast<double>(n)};
    for (int k = 1; k <= setup.k; ++k) {
      check(tspec_grid_predict(ms.get(), grid.get(), n, k, setup.degree, pred.data()));
      tspec_error_summary r;
      check(tspec_prediction_report(ex.data(), pred.data(), n, setup.n0, k, nullptr, &r));
      row.push_back(r.max_error);
      row.push_back(r.normalized_max);
    }
    csv.row(row);
  }
}

std::vector<double> angle_grid(const std::vector<double>& given, int points) {
  if (!given.empty()) return given;
  if (points < 2) config_error("--points must be >= 2");
  std::vector<double> s(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) s[static_cast<std::size_t>(i)] = kPi * i / (points - 1);
  s.back() = kPi;
  return s;
}

int threads_from_env() {
  const char* env = std::getenv("TOEPLITZ_SPECTRA_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) config_error("TOEPLITZ_SPECTRA_THREADS must be a non-negative integer");
  return static_cast<int>(v);
}

int run(int argc, char** argv) {
  CLI::App app{"Eigenvalue expansions and matrix-less prediction for banded Toeplitz matrices"};
  app.require_subcommand(1);
  std::string config_path, output;
  int threads = -1;
  bool allow_large = false;
  app.add_option("--config", config_path, "key = value file; command-line flags take precedence");
  app.add_option("-o,--output", output, "CSV destination (default stdout)");
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_flag("--allow-large", allow_large, "lift the reference solver size budget");
  app.set_version_flag("--version", std::string(tspec_version()));

  // ref-eig
  auto* ref = app.add_subcommand("ref-eig", "reference eigenvalues of T_n(f)");
  std::string ref_symbol;
  std::size_t ref_n = 0;
  double ref_tol = 0.0;
  ref->add_option("--symbol", ref_symbol, "symbol spec");
  ref->add_option("--n", ref_n, "matrix size");
  ref->add_option("--tol", ref_tol, "bisection tolerance (0 = default)");

  // eta / psi / phi
  auto* eta = app.add_subcommand("eta", "eta_f on a grid of angles");
  auto* psi = app.add_subcommand("psi", "psi for the perturbation f + g h");
  auto* phi = app.add_subcommand("phi", "phi for the perturbation f + g h^h");
  std::string cf, cg;
  int points = 65;
  std::vector<double> angles;
  bool derivative = false;
  QuadOptions quad;
  for (auto* c : {eta, psi, phi}) {
    c->add_option("--f,--symbol", cf, "symbol spec for f");
    if (c != eta) c->add_option("--g", cg, "symbol spec for g");
    c->add_option("--points", points, "equispaced angles on [0, pi]")->capture_default_str();
    c->add_option("--s", angles, "explicit angles")->delimiter(',');
    quad.add(c);
  }
  eta->add_flag("--derivative", derivative, "emit eta' instead of eta");

  // expand
  auto* expand = app.add_subcommand("expand", "k-term eigenvalue approximations and errors");
  std::string kind_name = "single";
  std::size_t expand_n = 0;
  expand->add_option("--kind", kind_name, "single, sum, linear_h or h_to_h")->capture_default_str();
  expand->add_option("--f", cf, "symbol spec for f");
  expand->add_option("--g", cg, "symbol spec for g");
  expand->add_option("--n", expand_n, "matrix size");
  quad.add(expand);

  // matrixless
  auto* ml = app.add_subcommand("matrixless", "matrix-less prediction for the finite-difference family");
  FnSetup fn;
  fn.add(ml, true);
  std::string emit = "predict";
  std::vector<std::size_t> ml_n;
  ml->add_option("--emit", emit, "grid, predict or validate")->capture_default_str();
  ml->add_option("--n", ml_n, "target size (a list for validate)")->delimiter(',');

  // table
  auto* table = app.add_subcommand("table", "error tables");
  std::string which;
  std::vector<std::size_t> table_n;
  std::string tf = "kms:0.5", tg = "laplacian";
  table->add_option("which", which, "q12, psi12, ga12, nfplus or nfminus");
  table->add_option("--n", table_n, "matrix sizes")->delimiter(',');
  table->add_option("--f", tf, "f for q12/psi12/ga12")->capture_default_str();
  table->add_option("--g", tg, "g for q12/psi12/ga12")->capture_default_str();
  FnSetup tfn;
  tfn.add(table, false);
  quad.add(table);

  // plotdata
  auto* plot = app.add_subcommand("plotdata", "normalized errors against the leading correction");
  std::size_t plot_n = 128;
  int plot_k = 1;
  plot->add_option("--kind", kind_name, "single, sum, linear_h or h_to_h")->capture_default_str();
  plot->add_option("--f", cf, "symbol spec for f");
  plot->add_option("--g", cg, "symbol spec for g");
  plot->add_option("--n", plot_n, "matrix size")->capture_default_str();
  plot->add_option("--k", plot_k, "1 or 2")->capture_default_str();
  quad.add(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (!config_path.empty()) {
    try {
      apply_config(app, sub, read_config(config_path));
    } catch (const CLI::ParseError& e) {
      config_error(std::string("config file: ") + e.what());
    }
  }
  if (threads < 0) threads = threads_from_env();
  tspec_set_threads(threads);

  Csv csv(output);
  const tspec_pv_config q = quad.config();

  if (sub == ref) {
    if (ref_symbol.empty()) config_error("--symbol is required");
    within_budget(ref_n, allow_large);
    Symbol s = make_symbol(ref_symbol);
    std::vector<double> ev(ref_n);
    check(tspec_toeplitz_eigenvalues(s.get(), ref_n, ref_tol, ev.data()));
    csv.header({"j", "lambda"});
    for (std::size_t j = 0; j < ref_n; ++j) csv.row({static_cast<double>(j + 1), ev[j]});
  } else if (sub == eta || sub == psi || sub == phi) {
    if (cf.empty()) config_error("--f is required");
    Symbol f = make_symbol(cf);
    require_simple_loop(f.get(), "f");
    Symbol g(nullptr, &tspec_symbol_free);
    int curve = derivative ? TSPEC_CURVE_ETA_PRIME : TSPEC_CURVE_ETA;
    if (sub != eta) {
      if (cg.empty()) config_error("--g is required");
      g = make_symbol(cg);
      require_simple_loop(g.get(), "g");
      curve = sub == psi ? TSPEC_CURVE_PSI : TSPEC_CURVE_PHI;
    }
    const auto s = angle_grid(angles, points);
    std::vector<double> v(s.size());
    check(tspec_curve_eval(curve, f.get(), g.get(), s.data(), s.size(), &q, v.data()));
    csv.header({"s", "value"});
    for (std::size_t i = 0; i < s.size(); ++i) csv.row({s[i], v[i]});
  } else if (sub == expand) {
    const int kind = kind_from(kind_name);
    within_budget(expand_n, allow_large);
    Pair p = load_pair(kind, cf, cg);
    const std::size_t n = expand_n;
    std::vector<double> ex(n), a1(n), a2(n), a3(n);
    check(tspec_exact_eigenvalues(kind, p.f.get(), p.g.get(), n, ex.data()));
    check(tspec_approx_eigenvalues_all(kind, p.f.get(), p.g.get(), n, &q, a1.data(), a2.data(),
                                       a3.data()));
    csv.header({"j", "d_jn", "lambda_exact", "lambda_k1", "lambda_k2", "lambda_k3", "err_k1",
                "err_k2", "err_k3"});
    for (std::size_t j = 0; j < n; ++j)
      csv.row({static_cast<double>(j + 1), mesh(j + 1, n), ex[j], a1[j], a2[j], a3[j],
               ex[j] - a1[j], ex[j] - a2[j], ex[j] - a3[j]});
  } else if (sub == ml) {
    if (emit == "validate") {
      fn_table(csv, fn, ml_n, allow_large);
    } else if (emit == "grid") {
      auto [ms, grid] = fn.build();
      std::size_t n0 = 0;
      int gk = 0;
      check(tspec_grid_info(grid.get(), &n0, &gk));
      std::vector<std::vector<double>> c(static_cast<std::size_t>(gk - 1), std::vector<double>(n0));
      std::vector<std::string> cols{"theta"};
      for (int l = 1; l < gk; ++l) {
        check(tspec_grid_values(grid.get(), l, c[static_cast<std::size_t>(l - 1)].data(), n0));
        cols.push_back("c" + std::to_string(l));
      }
      csv.header(cols);
      for (std::size_t j = 0; j < n0; ++j) {
        std::vector<double> row{mesh(j + 1, n0)};
        for (const auto& col : c) row.push_back(col[j]);
        csv.row(row);
      }
    } else if (emit == "predict") {
      if (ml_n.size() != 1) config_error("predict needs exactly one --n");
      const std::size_t n = ml_n.front();
      if (n < 1) config_error("n must be >= 1");
      auto [ms, grid] = fn.build();
      std::vector<double> pred(n);
      check(tspec_grid_predict(ms.get(), grid.get(), n, fn.k, fn.degree, pred.data()));
      csv.header({"j", "d_jn", "lambda_pred"});
      for (std::size_t j = 0; j < n; ++j) csv.row({static_cast<double>(j + 1), mesh(j + 1, n), pred[j]});
    } else {
      config_error("--emit must be grid, predict or validate");
    }
  } else if (sub == table) {
    if (which == "nfplus" || which == "nfminus") {
      tfn.alpha1 = which == "nfplus" ? 3.0 : -3.0;
      tfn.alpha0 = which == "nfplus" ? 2.0 : 5.0;
      fn_table(csv, tfn, table_n, allow_large);
    } else {
      int kind = -1;
      if (which == "q12") kind = TSPEC_KIND_SUM;
      if (which == "psi12") kind = TSPEC_KIND_LINEAR_H;
      if (which == "ga12") kind = TSPEC_KIND_H_TO_H;
      if (kind < 0) config_error("unknown table '" + which + "' (q12, psi12, ga12, nfplus, nfminus)");
      if (table_n.empty()) config_error("the n list is empty");
      for (std::size_t n : table_n) within_budget(n, allow_large);
      Pair p = load_pair(kind, tf, tg);
      csv.header({"n", "eps_k1", "normalized_k1", "eps_k2", "normalized_k2", "eps_k3",
                  "normalized_k3"});
      for (std::size_t n : table_n) {
        std::vector<double> row{static_cast<double>(n)};
        for (const Summary& s : expansion_errors(kind, p, n, q)) {
          row.push_back(s.max_error);
          row.push_back(s.normalized);
        }
        csv.row(row);
      }
    }
  } else if (sub == plot) {
    const int kind = kind_from(kind_name);
    if (plot_k != 1 && plot_k != 2) config_error("--k must be 1 or 2");
    within_budget(plot_n, allow_large);
    Pair p = load_pair(kind, cf, cg);
    const std::size_t n = plot_n;
    std::vector<double> ex(n), ap(n), per(n);
    check(tspec_exact_eigenvalues(kind, p.f.get(), p.g.get(), n, ex.data()));
    check(tspec_approx_eigenvalues(kind, p.f.get(), p.g.get(), n, plot_k, &q, ap.data()));
    tspec_error_summary r;
    check(tspec_error_report(ex.data(), ap.data(), n, kind, plot_k, per.data(), &r));
    const double scale = normalization(kind, plot_k, n);
    csv.header({"theta", "coefficient", "normalized_error"});
    for (std::size_t j = 0; j < n; ++j) {
      double d = mesh(j + 1, n), c = 0.0;
      check(tspec_correction_curve(kind, p.f.get(), p.g.get(), plot_k, d, n, &q, &c));
      csv.row({d, c, per[j] * scale});
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::fprintf(stderr, "tspec: %s\n", f.message.c_str());
    return f.code;
  }
}
