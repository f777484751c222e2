// Batch driver for the ovmq shared library: configures truncation and
// quadrature, runs named experiments, and exports matrices, spectra, defect
// reports and phase-space fields for external plotting.  All numerics go
// through the C API in ovmq/ovmq.h.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ovmq/ovmq.h"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ovmq_status st, const char* what, bool config_stage = false) {
  if (st == OVMQ_OK) return;
  const std::string msg = std::string(what) + ": " + ovmq_last_error();
  if (config_stage || st == OVMQ_ERR_INVALID_ARGUMENT || st == OVMQ_ERR_DIVERGENT_MOMENT)
    throw ConfigError(msg);
  throw RunError(msg);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  ovmq_string_free(s);
  return out;
}

std::string fmt(double v) {
  json j = v;
  return j.dump();
}

// RAII wrappers for the C handles
template <typename T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  ~Handle() { reset(); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    if (this != &o) {
      reset();
      ptr = o.ptr;
      o.ptr = nullptr;
    }
    return *this;
  }
  void reset() {
    if (ptr) Destroy(ptr);
    ptr = nullptr;
  }
  T** out() {
    reset();
    return &ptr;
  }
  operator T*() const { return ptr; }
};

using SpaceHandle = Handle<ovmq_space, ovmq_space_destroy>;
using OpHandle = Handle<ovmq_op, ovmq_op_destroy>;
using WeightHandle = Handle<ovmq_weight, ovmq_weight_destroy>;
using QuadHandle = Handle<ovmq_quadrature, ovmq_quadrature_destroy>;
using GridHandle = Handle<ovmq_grid, ovmq_grid_destroy>;
using FiducialHandle = Handle<ovmq_fiducial, ovmq_fiducial_destroy>;
using WindowHandle = Handle<ovmq_window, ovmq_window_destroy>;
using FamilyHandle = Handle<ovmq_family, ovmq_family_destroy>;

struct Config {
  json j = json::object();

  int geti(const char* key, int def) const {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_number()) throw ConfigError(std::string("config: ") + key + " must be a number");
    return j.at(key).get<int>();
  }
  double getd(const char* key, double def) const {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_number()) throw ConfigError(std::string("config: ") + key + " must be a number");
    return j.at(key).get<double>();
  }
  std::vector<double> getv(const char* key, std::vector<double> def) const {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_array()) throw ConfigError(std::string("config: ") + key + " must be an array");
    return j.at(key).get<std::vector<double>>();
  }
};

struct Context {
  Config config;
  std::filesystem::path outdir;
  std::vector<std::string> outputs;

  void write_file(const std::string& name, const std::string& content) {
    std::filesystem::create_directories(outdir);
    std::ofstream os(outdir / name, std::ios::binary);
    if (!os) throw RunError("cannot open output file " + (outdir / name).string());
    os << content;
    outputs.push_back(name);
  }

  void write_manifest(const std::string& command, const json& tolerances) {
    json m;
    m["command"] = command;
    m["version"] = ovmq_version();
    m["config"] = config.j;
    m["outputs"] = outputs;
    m["tolerances"] = tolerances;
    std::filesystem::create_directories(outdir);
    std::ofstream os(outdir / "manifest.json", std::ios::binary);
    os << m.dump(2) << '\n';
  }
};

// phase-space callbacks usable through the C API
int phase_const_one(double, double, ovmq_complex* out, void*) {
  out->re = 1.0;
  out->im = 0.0;
  return 0;
}
int phase_q(double re, double, ovmq_complex* out, void*) {
  out->re = std::sqrt(2.0) * re;
  out->im = 0.0;
  return 0;
}
int phase_p(double, double im, ovmq_complex* out, void*) {
  out->re = std::sqrt(2.0) * im;
  out->im = 0.0;
  return 0;
}
int phase_j(double re, double im, ovmq_complex* out, void*) {
  out->re = re * re + im * im;
  out->im = 0.0;
  return 0;
}

int cmd_cg_table(Context& ctx) {
  const int dim = ctx.config.geti("dim", 32);
  const int n_radial = ctx.config.geti("n_radial", 80);
  const int n_angular = ctx.config.geti("n_angular", 64);
  const std::vector<double> s_list =
      ctx.config.getv("s_list", {-3.0, -2.0, -1.0, -0.5, 0.0});

  SpaceHandle space;
  check(ovmq_space_create(dim, space.out()), "space", true);
  QuadHandle quad;
  check(ovmq_quadrature_create(n_radial, n_angular, quad.out()), "quadrature", true);

  std::ostringstream table, summary;
  table << "s,n,analytic,quadrature\n";
  summary << "s,trace,min_eigenvalue,psd,max_offdiag_quadrature\n";

  std::vector<ovmq_complex> buf(static_cast<size_t>(dim) * dim);
  std::vector<double> eigs(dim);
  for (double s : s_list) {
    if (!(s < 1.0)) throw ConfigError("cg-table: every s must satisfy Re s < 1");
    OpHandle analytic;
    check(ovmq_cg_m_analytic(space, s, 0.0, analytic.out()), "cg_m_analytic");
    OpHandle quad_m;
    WeightHandle w;
    check(ovmq_weight_cahill_glauber(s, 0.0, w.out()), "weight");
    const bool has_quad =
        ovmq_build_m(space, w, quad, quad_m.out()) == OVMQ_OK;  // N/A for Re s >= 0

    ovmq_complex tr{};
    check(ovmq_op_trace(analytic, &tr), "trace");
    check(ovmq_op_hermitian_eigenvalues(analytic, eigs.data()), "eigenvalues");
    const double min_eig = eigs.front();

    double max_offdiag = 0.0;
    if (has_quad) {
      check(ovmq_op_copy(quad_m, buf.data()), "copy");
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          if (r != c)
            max_offdiag = std::max(max_offdiag, std::hypot(buf[r * dim + c].re,
                                                           buf[r * dim + c].im));
    }

    for (int n = 0; n < dim; ++n) {
      ovmq_complex a{};
      check(ovmq_op_entry(analytic, n, n, &a), "entry");
      table << fmt(s) << ',' << n << ',' << fmt(a.re) << ',';
      if (has_quad) {
        ovmq_complex qv{};
        check(ovmq_op_entry(quad_m, n, n, &qv), "entry");
        table << fmt(qv.re);
      } else {
        table << "NA";
      }
      table << '\n';
    }
    summary << fmt(s) << ',' << fmt(tr.re) << ',' << fmt(min_eig) << ','
            << (min_eig >= -1e-10 ? "true" : "false") << ','
            << (has_quad ? fmt(max_offdiag) : "NA") << '\n';
  }

  ctx.write_file("cg_table.csv", table.str());
  ctx.write_file("cg_summary.csv", summary.str());
  ctx.write_manifest("cg-table", {{"psd_min_eigenvalue", -1e-10}});
  return 0;
}

int cmd_angle(Context& ctx) {
  const int dim = ctx.config.geti("dim", 32);
  const int eig_dim = ctx.config.geti("angle_eig_dim", 64);
  const int n_radial = ctx.config.geti("angle_n_radial", 120);
  const int n_angular = ctx.config.geti("angle_n_angular", 256);

  SpaceHandle space;
  check(ovmq_space_create(dim, space.out()), "space", true);
  OpHandle analytic, numeric;
  check(ovmq_angle_operator_analytic(space, analytic.out()), "angle analytic");
  check(ovmq_angle_operator_numeric(space, n_radial, n_angular, numeric.out()),
        "angle numeric");

  double defect = 0.0;
  check(ovmq_op_block_max_diff(analytic, numeric, -1, &defect), "defect");
  double herm = 0.0;
  check(ovmq_op_hermiticity_defect(analytic, &herm), "hermiticity");
  ovmq_complex tr{};
  check(ovmq_op_trace(analytic, &tr), "trace");

  SpaceHandle eig_space;
  check(ovmq_space_create(eig_dim, eig_space.out()), "space", true);
  OpHandle big;
  check(ovmq_angle_operator_analytic(eig_space, big.out()), "angle analytic");
  std::vector<double> eigs(eig_dim);
  check(ovmq_op_hermitian_eigenvalues(big, eigs.data()), "eigenvalues");

  std::ostringstream eig_csv;
  eig_csv << "index,eigenvalue\n";
  for (int i = 0; i < eig_dim; ++i) eig_csv << i << ',' << fmt(eigs[i]) << '\n';

  json meta;
  meta["angle_n_radial"] = n_radial;
  meta["angle_n_angular"] = n_angular;
  char* rec = nullptr;
  check(ovmq_op_to_json(analytic, meta.dump().c_str(), &rec), "matrix record");
  ctx.write_file("angle_matrix.json", take_string(rec));
  ctx.write_file("angle_eigenvalues.csv", eig_csv.str());

  json report;
  report["numeric_vs_analytic_defect"] = defect;
  report["hermiticity_defect"] = herm;
  report["trace_over_dim"] = tr.re / dim;
  report["eigenvalue_min"] = eigs.front();
  report["eigenvalue_max"] = eigs.back();
  report["eig_dim"] = eig_dim;
  ctx.write_file("angle_report.json", report.dump(2) + "\n");
  ctx.write_manifest("angle", {{"numeric_vs_analytic", 1e-4},
                               {"hermiticity", 1e-12},
                               {"eigenvalue_range", {-0.15, 2.0 * M_PI + 0.15}}});
  return 0;
}

int cmd_thermal(Context& ctx) {
  const int dim = ctx.config.geti("dim", 32);
  const double omega = ctx.config.getd("omega", 1.0);
  const std::vector<double> temps =
      ctx.config.getv("temp_list", {0.0, 0.25, 0.5, 1.0, 2.0, 4.0});
  if (!(omega > 0.0)) throw ConfigError("thermal: omega must be > 0");

  SpaceHandle space;
  check(ovmq_space_create(dim, space.out()), "space", true);

  std::ostringstream curve, diagonals;
  curve << "omega,T,s,equality_defect,mean_occupation,bose_expected,tail_mass\n";
  diagonals << "omega,T,n,rho_nn\n";

  for (double t : temps) {
    if (t < 0.0) throw ConfigError("thermal: temperatures must be >= 0");
    double s = 0.0;
    check(ovmq_thermal_s(omega, t, &s), "thermal_s", true);
    OpHandle rho, analytic;
    double tail = 0.0;
    check(ovmq_boltzmann_rho(space, omega, t, rho.out(), &tail), "boltzmann_rho");
    check(ovmq_cg_m_analytic(space, s, 0.0, analytic.out()), "cg_m_analytic");
    double defect = 0.0;
    check(ovmq_op_block_max_diff(rho, analytic, dim, &defect), "equality defect");

    double mean = 0.0;
    for (int n = 0; n < dim; ++n) {
      ovmq_complex v{};
      check(ovmq_op_entry(rho, n, n, &v), "entry");
      mean += n * v.re;
      diagonals << fmt(omega) << ',' << fmt(t) << ',' << n << ',' << fmt(v.re) << '\n';
    }
    const double bose = t == 0.0 ? 0.0 : 1.0 / std::expm1(omega / t);
    curve << fmt(omega) << ',' << fmt(t) << ',' << fmt(s) << ',' << fmt(defect) << ','
          << fmt(mean) << ',' << fmt(bose) << ',' << fmt(tail) << '\n';
  }

  ctx.write_file("thermal.csv", curve.str());
  ctx.write_file("thermal_diagonals.csv", diagonals.str());
  ctx.write_manifest("thermal", {{"equality_defect", 1e-12}});
  return 0;
}

int cmd_affine(Context& ctx) {
  const double alpha = ctx.config.getd("alpha", 2.0);
  const double lambda = ctx.config.getd("lambda", 1.0);
  const double x_min = ctx.config.getd("x_min", 1e-6);
  const double x_max = ctx.config.getd("x_max", 80.0);
  const int n_x = ctx.config.geti("n_x", 2048);
  const double q_min = ctx.config.getd("q_min", 0.05);
  const double q_max = ctx.config.getd("q_max", 240.0);
  const int n_q = ctx.config.geti("n_q", 120);
  const double p_max = ctx.config.getd("p_max", 60.0);
  const int n_p = ctx.config.geti("n_p", 512);

  GridHandle grid;
  check(ovmq_grid_geometric(x_min, x_max, n_x, grid.out()), "grid", true);
  FiducialHandle psi;
  check(ovmq_fiducial_power_exp(alpha, lambda, grid, psi.out()), "fiducial", true);
  WindowHandle window;
  check(ovmq_window_create(q_min, q_max, n_q, p_max, n_p, window.out()), "window", true);

  const double gammas[4] = {-2.0, -1.0, 0.0, 1.0};
  char* moments = nullptr;
  check(ovmq_moments_json(psi, gammas, 4, &moments), "moments");
  ctx.write_file("moments.json", take_string(moments) + "\n");

  ovmq_affine_defects defects{};
  check(ovmq_affine_operator_defects(psi, window, &defects), "operator defects");

  char* csv = nullptr;
  double mass = 0.0, peak_q = 0.0, peak_p = 0.0;
  check(ovmq_affine_density_csv(psi, window, &csv, &mass, &peak_q, &peak_p), "density");
  ctx.write_file("density.csv", take_string(csv));

  double k = 0.0;
  int flag = 0;
  check(ovmq_kinetic_k(psi, &k, &flag), "kinetic K");

  json report;
  report["K"] = k;
  report["K_geq_3_4"] = flag != 0;
  report["moment_ratio_defect_beta_half"] = defects.moment_ratio_beta_half;
  report["moment_ratio_defect_beta_1"] = defects.moment_ratio_beta_1;
  report["moment_ratio_defect_beta_2"] = defects.moment_ratio_beta_2;
  report["p_defect"] = defects.p_defect;
  report["kinetic_k_fit"] = defects.kinetic_k_fit;
  report["kinetic_fit_rel_err"] = defects.kinetic_rel_err;
  report["resolution_defect"] = defects.resolution_defect;
  report["density_mass"] = mass;
  report["density_peak_q"] = peak_q;
  report["density_peak_p"] = peak_p;
  ctx.write_file("affine_report.json", report.dump(2) + "\n");
  ctx.write_manifest("affine", {{"moment_ratio", 1e-3},
                                {"p_identity", 1e-3},
                                {"kinetic_fit_rel", 0.02},
                                {"resolution", 1e-3},
                                {"density_mass", 1e-3}});
  return 0;
}

int cmd_berezin(Context& ctx) {
  const int dim = ctx.config.geti("dim", 64);
  const int n_radial = ctx.config.geti("n_radial", 80);
  const int n_angular = ctx.config.geti("n_angular", 64);
  const double half = ctx.config.getd("berezin_window", 2.0);
  const int grid_n = ctx.config.geti("berezin_grid", 21);
  const std::string fname = ctx.config.j.value("berezin_f", std::string("j"));

  ovmq_phase_fn fn = nullptr;
  if (fname == "one")
    fn = phase_const_one;
  else if (fname == "q")
    fn = phase_q;
  else if (fname == "p")
    fn = phase_p;
  else if (fname == "j")
    fn = phase_j;
  else
    throw ConfigError("berezin: berezin_f must be one of one|q|p|j");

  SpaceHandle space;
  check(ovmq_space_create(dim, space.out()), "space", true);
  QuadHandle quad;
  check(ovmq_quadrature_create(n_radial, n_angular, quad.out()), "quadrature", true);
  FamilyHandle family;
  check(ovmq_family_coherent(space, family.out()), "family");

  char* csv = nullptr;
  check(ovmq_berezin_field_csv(fn, nullptr, family, family, quad, -half, half, -half, half,
                               grid_n, grid_n, &csv),
        "berezin field");
  ctx.write_file("berezin_field.csv", take_string(csv));
  ctx.write_manifest("berezin", {{"kernel_normalization", 1e-6}});
  return 0;
}

int cmd_sphere(Context& ctx) {
  const int count = ctx.config.geti("sphere_count", 1000);
  const std::uint64_t seed = ctx.config.j.value("seed", 20240901ULL);
  if (count < 1) throw ConfigError("sphere: sphere_count must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> uj(0.0, 2.0);

  std::vector<double> xs, ps;
  xs.reserve(3 * count);
  ps.reserve(3 * count);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    double x[3], t[3];
    double nx = 0.0;
    do {
      for (double& v : x) v = u(rng);
      nx = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    } while (nx < 1e-3);
    for (double& v : x) v /= nx;
    double dot = 0.0, nt = 0.0;
    do {
      for (double& v : t) v = u(rng);
      dot = t[0] * x[0] + t[1] * x[1] + t[2] * x[2];
      for (int k = 0; k < 3; ++k) t[k] -= dot * x[k];
      nt = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
    } while (nt < 1e-6);
    const double j = uj(rng);
    for (int k = 0; k < 3; ++k) t[k] *= j / nt;

    double are[3], aim[3];
    check(ovmq_sphere_complexify(x, t, are, aim), "complexify");
    std::complex<double> sq = 0.0;
    for (int k = 0; k < 3; ++k) {
      const std::complex<double> a(are[k], aim[k]);
      sq += a * a;
    }
    worst = std::max(worst, std::abs(sq - std::complex<double>(1.0)));
    for (int k = 0; k < 3; ++k) {
      xs.push_back(x[k]);
      ps.push_back(t[k]);
    }
  }

  char* points = nullptr;
  check(ovmq_sphere_points_json(xs.data(), ps.data(), count, &points), "points json");
  ctx.write_file("sphere_points.json", take_string(points) + "\n");

  json report;
  report["count"] = count;
  report["max_bilinear_defect"] = worst;
  ctx.write_file("sphere_report.json", report.dump(2) + "\n");
  ctx.write_manifest("sphere", {{"bilinear_normalization", 1e-10}});
  return 0;
}

int cmd_verify(Context& ctx) {
  char* report = nullptr;
  int n_failed = 0, n_skipped = 0;
  const std::string config_text = ctx.config.j.dump();
  check(ovmq_verify_run(config_text.c_str(), &report, &n_failed, &n_skipped), "verify",
        true);
  const std::string report_text = take_string(report);
  ctx.write_file("verify_report.json", report_text + "\n");
  ctx.write_manifest("verify", json::object());

  const json parsed = json::parse(report_text);
  for (const auto& c : parsed.at("checks"))
    std::cout << (c.at("status") == "pass"   ? "PASS "
                  : c.at("status") == "skip" ? "SKIP "
                                             : "FAIL ")
              << c.at("name").get<std::string>() << " (value "
              << fmt(c.at("value").get<double>()) << ", threshold "
              << fmt(c.at("threshold").get<double>()) << ")\n";
  std::cout << "failed: " << n_failed << ", skipped: " << n_skipped << '\n';
  return n_failed == 0 ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ovmq - covariant integral quantization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the shared options after the subcommand too

  std::string config_path, outdir = "out";
  std::optional<int> dim;
  std::optional<double> s_override, omega, temp, alpha, lambda;
  std::optional<std::uint64_t> seed;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--outdir", outdir, "output directory");
  app.add_option("--dim", dim, "Fock truncation dimension");
  app.add_option("--s", s_override, "Cahill-Glauber parameter (replaces s_list)");
  app.add_option("--omega", omega, "oscillator quantum");
  app.add_option("--temp", temp, "temperature (replaces temp_list)");
  app.add_option("--alpha", alpha, "fiducial power");
  app.add_option("--lambda", lambda, "fiducial decay rate");
  app.add_option("--seed", seed, "seed for randomized sweeps");

  auto* c_cg = app.add_subcommand("cg-table", "analytic vs quadrature Cahill-Glauber table");
  auto* c_angle = app.add_subcommand("angle", "angle operator matrix, spectrum and defect");
  auto* c_thermal = app.add_subcommand("thermal", "temperature-indexed POVM diagnostics");
  auto* c_affine = app.add_subcommand("affine", "affine moments, kinetic term and density");
  auto* c_berezin = app.add_subcommand("berezin", "Berezin transform field export");
  auto* c_sphere = app.add_subcommand("sphere", "complexified sphere point export");
  auto* c_verify = app.add_subcommand("verify", "run the full invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitConfigError : 0;
  }

  try {
    Context ctx;
    ctx.outdir = outdir;
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) throw ConfigError("cannot open config file " + config_path);
      ctx.config.j = json::parse(is, nullptr, false);
      if (ctx.config.j.is_discarded() || !ctx.config.j.is_object())
        throw ConfigError("config file is not a JSON object");
    }
    if (dim) ctx.config.j["dim"] = *dim;
    if (s_override) ctx.config.j["s_list"] = {*s_override};
    if (omega) ctx.config.j["omega"] = *omega;
    if (temp) ctx.config.j["temp_list"] = {*temp};
    if (alpha) ctx.config.j["alpha"] = *alpha;
    if (lambda) ctx.config.j["lambda"] = *lambda;
    if (seed) ctx.config.j["seed"] = *seed;

    if (c_cg->parsed()) return cmd_cg_table(ctx);
    if (c_angle->parsed()) return cmd_angle(ctx);
    if (c_thermal->parsed()) return cmd_thermal(ctx);
    if (c_affine->parsed()) return cmd_affine(ctx);
    if (c_berezin->parsed()) return cmd_berezin(ctx);
    if (c_sphere->parsed()) return cmd_sphere(ctx);
    if (c_verify->parsed()) return cmd_verify(ctx);
    return kExitConfigError;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
