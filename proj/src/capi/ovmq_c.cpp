#include "ovmq/ovmq.h"

#include <cstring>
#include <new>
#include <string>

#include "ovmq/affine.hpp"
#include "ovmq/berezin.hpp"
#include "ovmq/errors.hpp"
#include "ovmq/fock.hpp"
#include "ovmq/io.hpp"
#include "ovmq/phase_quadrature.hpp"
#include "ovmq/sphere.hpp"
#include "ovmq/verify.hpp"
#include "ovmq/version.hpp"
#include "ovmq/weights.hpp"
#include "ovmq/wh.hpp"

// ---- handle definitions ----

struct ovmq_space {
  ovmq::FockSpace v;
};
struct ovmq_op {
  ovmq::FockOperator v;
};
struct ovmq_weight {
  ovmq::WeightFunction v;
};
struct ovmq_quadrature {
  ovmq::PhaseSpaceQuadrature v;
};
struct ovmq_wh {
  ovmq::WHQuantizer v;
};
struct ovmq_family {
  ovmq::DisplacedFamily v;
};
struct ovmq_grid {
  ovmq::HalfLineGrid v;
};
struct ovmq_fiducial {
  ovmq::FiducialVector v;
};
struct ovmq_window {
  ovmq::HalfPlaneWindow v;
};

namespace {

thread_local std::string g_last_error;

ovmq_status set_error(ovmq_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

ovmq_status map_exception() {
  try {
    throw;
  } catch (const ovmq::Error& e) {
    switch (e.code()) {
      case ovmq::ErrorCode::invalid_argument:
        return set_error(OVMQ_ERR_INVALID_ARGUMENT, e.what());
      case ovmq::ErrorCode::integrability:
        return set_error(OVMQ_ERR_INTEGRABILITY, e.what());
      case ovmq::ErrorCode::node_evaluation:
        return set_error(OVMQ_ERR_NODE_EVALUATION, e.what());
      case ovmq::ErrorCode::divergent_moment:
        return set_error(OVMQ_ERR_DIVERGENT_MOMENT, e.what());
      case ovmq::ErrorCode::grid_mismatch:
        return set_error(OVMQ_ERR_GRID_MISMATCH, e.what());
      default:
        return set_error(OVMQ_ERR_INTERNAL, e.what());
    }
  } catch (const std::exception& e) {
    return set_error(OVMQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(OVMQ_ERR_INTERNAL, "unknown error");
  }
}

template <typename F>
ovmq_status guarded(F&& fn) {
  try {
    fn();
    return OVMQ_OK;
  } catch (...) {
    return map_exception();
  }
}

ovmq_status require(bool cond, const char* msg) {
  return cond ? OVMQ_OK : set_error(OVMQ_ERR_INVALID_ARGUMENT, msg);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ovmq::PhaseFunction wrap_phase_fn(ovmq_phase_fn f, void* user) {
  return [f, user](ovmq::Complex z) {
    ovmq_complex out{0.0, 0.0};
    if (f(z.real(), z.imag(), &out, user) != 0)
      throw ovmq::NodeEvaluationError("callback reported failure");
    return ovmq::Complex(out.re, out.im);
  };
}

}  // namespace

extern "C" {

const char* ovmq_version(void) { return ovmq::kVersion; }

const char* ovmq_last_error(void) { return g_last_error.c_str(); }

void ovmq_string_free(char* s) { delete[] s; }

// ---- Fock ----

ovmq_status ovmq_space_create(int dim, ovmq_space** out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] { *out = new ovmq_space{ovmq::FockSpace(dim)}; });
}

void ovmq_space_destroy(ovmq_space* s) { delete s; }

int ovmq_space_dim(const ovmq_space* s) { return s ? s->v.dim : 0; }

void ovmq_op_destroy(ovmq_op* op) { delete op; }

int ovmq_op_dim(const ovmq_op* op) { return op ? op->v.dim() : 0; }

ovmq_status ovmq_op_entry(const ovmq_op* op, int row, int col, ovmq_complex* out) {
  if (auto st = require(op && out, "null argument")) return st;
  if (auto st = require(row >= 0 && row < op->v.dim() && col >= 0 && col < op->v.dim(),
                        "index out of range"))
    return st;
  const ovmq::Complex v = op->v.mat(row, col);
  *out = {v.real(), v.imag()};
  return OVMQ_OK;
}

ovmq_status ovmq_op_copy(const ovmq_op* op, ovmq_complex* buffer) {
  if (auto st = require(op && buffer, "null argument")) return st;
  const int d = op->v.dim();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const ovmq::Complex v = op->v.mat(r, c);
      buffer[r * d + c] = {v.real(), v.imag()};
    }
  return OVMQ_OK;
}

ovmq_status ovmq_op_trace(const ovmq_op* op, ovmq_complex* out) {
  if (auto st = require(op && out, "null argument")) return st;
  const ovmq::Complex t = op->v.mat.trace();
  *out = {t.real(), t.imag()};
  return OVMQ_OK;
}

ovmq_status ovmq_op_hermitian_eigenvalues(const ovmq_op* op, double* out) {
  if (auto st = require(op && out, "null argument")) return st;
  return guarded([&] {
    const Eigen::VectorXd e = ovmq::hermitian_eigenvalues(op->v.mat);
    for (int i = 0; i < e.size(); ++i) out[i] = e[i];
  });
}

ovmq_status ovmq_op_hermiticity_defect(const ovmq_op* op, double* out) {
  if (auto st = require(op && out, "null argument")) return st;
  return guarded([&] { *out = ovmq::hermiticity_defect(op->v.mat); });
}

ovmq_status ovmq_op_block_max_diff(const ovmq_op* a, const ovmq_op* b, int block,
                                   double* out) {
  if (auto st = require(a && b && out, "null argument")) return st;
  return guarded([&] {
    const int blk = block < 0 ? ovmq::default_safe_block(a->v.dim()) : block;
    *out = ovmq::block_max_diff(a->v.mat, b->v.mat, blk);
  });
}

ovmq_status ovmq_op_to_json(const ovmq_op* op, const char* metadata_json, char** out) {
  if (auto st = require(op && out, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(
        ovmq::matrix_record_json(op->v, metadata_json ? metadata_json : ""));
  });
}

#define OVMQ_SIMPLE_OP(NAME, CALL)                                   \
  ovmq_status NAME(const ovmq_space* s, ovmq_op** out) {             \
    if (auto st = require(s && out, "null argument")) return st;     \
    return guarded([&] { *out = new ovmq_op{CALL(s->v)}; });         \
  }

OVMQ_SIMPLE_OP(ovmq_annihilation, ovmq::annihilation)
OVMQ_SIMPLE_OP(ovmq_creation, ovmq::creation)
OVMQ_SIMPLE_OP(ovmq_number_operator, ovmq::number_operator)
OVMQ_SIMPLE_OP(ovmq_parity, ovmq::parity)
OVMQ_SIMPLE_OP(ovmq_angle_operator_analytic, ovmq::angle_operator_analytic)

#undef OVMQ_SIMPLE_OP

ovmq_status ovmq_position_operator(const ovmq_space* s, ovmq_op** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new ovmq_op{ovmq::quadrature_pair(s->v).first}; });
}

ovmq_status ovmq_momentum_operator(const ovmq_space* s, ovmq_op** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new ovmq_op{ovmq::quadrature_pair(s->v).second}; });
}

ovmq_status ovmq_displacement(const ovmq_space* s, double z_re, double z_im, int method,
                              ovmq_op** out) {
  if (auto st = require(s && out, "null argument")) return st;
  if (auto st = require(method == OVMQ_DISPLACEMENT_CLOSED_FORM ||
                            method == OVMQ_DISPLACEMENT_EXPONENTIAL,
                        "unknown displacement method"))
    return st;
  return guarded([&] {
    const auto m = method == OVMQ_DISPLACEMENT_EXPONENTIAL
                       ? ovmq::DisplacementMethod::exponential
                       : ovmq::DisplacementMethod::closed_form;
    *out = new ovmq_op{ovmq::displacement(s->v, ovmq::Complex(z_re, z_im), m)};
  });
}

ovmq_status ovmq_coherent_state(const ovmq_space* s, double z_re, double z_im,
                                ovmq_complex* coeffs, double* norm_out) {
  if (auto st = require(s && coeffs, "null argument")) return st;
  return guarded([&] {
    const ovmq::StateVector v = ovmq::coherent_state(s->v, ovmq::Complex(z_re, z_im));
    for (int n = 0; n < v.dim(); ++n) coeffs[n] = {v.coeffs[n].real(), v.coeffs[n].imag()};
    if (norm_out) *norm_out = v.norm();
  });
}

// ---- weights / quadrature ----

ovmq_status ovmq_weight_cahill_glauber(double s_re, double s_im, ovmq_weight** out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] {
    *out = new ovmq_weight{
        ovmq::WeightFunction::cahill_glauber(ovmq::Complex(s_re, s_im))};
  });
}

ovmq_status ovmq_weight_custom(ovmq_weight_fn fn, void* user, int real_even,
                               int reflection_real, ovmq_weight** out) {
  if (auto st = require(fn && out, "null argument")) return st;
  return guarded([&] {
    auto eval = [fn, user](ovmq::Complex z) {
      ovmq_complex v{0.0, 0.0};
      if (fn(z.real(), z.imag(), &v, user) != 0)
        throw ovmq::NodeEvaluationError("weight callback reported failure");
      return ovmq::Complex(v.re, v.im);
    };
    *out = new ovmq_weight{ovmq::WeightFunction::custom(eval, real_even != 0,
                                                        reflection_real != 0)};
  });
}

void ovmq_weight_destroy(ovmq_weight* w) { delete w; }

ovmq_status ovmq_quadrature_create(int n_radial, int n_angular, ovmq_quadrature** out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded(
      [&] { *out = new ovmq_quadrature{ovmq::PhaseSpaceQuadrature(n_radial, n_angular)}; });
}

void ovmq_quadrature_destroy(ovmq_quadrature* q) { delete q; }

ovmq_status ovmq_quadrature_norm_defect(const ovmq_quadrature* q, double* out) {
  if (auto st = require(q && out, "null argument")) return st;
  *out = q->v.gaussian_norm_defect();
  return OVMQ_OK;
}

// ---- W-H quantizer ----

ovmq_status ovmq_wh_create(const ovmq_space* s, const ovmq_weight* w,
                           const ovmq_quadrature* q, ovmq_wh** out) {
  if (auto st = require(s && w && q && out, "null argument")) return st;
  return guarded([&] { *out = new ovmq_wh{ovmq::WHQuantizer(s->v, w->v, q->v)}; });
}

void ovmq_wh_destroy(ovmq_wh* wh) { delete wh; }

ovmq_status ovmq_wh_m(const ovmq_wh* wh, ovmq_op** out) {
  if (auto st = require(wh && out, "null argument")) return st;
  return guarded([&] { *out = new ovmq_op{wh->v.m_operator()}; });
}

ovmq_status ovmq_build_m(const ovmq_space* s, const ovmq_weight* w,
                         const ovmq_quadrature* q, ovmq_op** out) {
  if (auto st = require(s && w && q && out, "null argument")) return st;
  return guarded([&] { *out = new ovmq_op{ovmq::build_m(s->v, w->v, q->v)}; });
}

ovmq_status ovmq_cg_m_analytic(const ovmq_space* s, double s_re, double s_im,
                               ovmq_op** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded(
      [&] { *out = new ovmq_op{ovmq::cg_m_analytic(s->v, ovmq::Complex(s_re, s_im))}; });
}

ovmq_status ovmq_wh_displaced_m(const ovmq_wh* wh, double z_re, double z_im,
                                ovmq_op** out) {
  if (auto st = require(wh && out, "null argument")) return st;
  return guarded(
      [&] { *out = new ovmq_op{wh->v.displaced_m(ovmq::Complex(z_re, z_im))}; });
}

ovmq_status ovmq_wh_resolution_defect(const ovmq_wh* wh, int block, double* out) {
  if (auto st = require(wh && out, "null argument")) return st;
  return guarded([&] { *out = wh->v.resolution_defect(block); });
}

ovmq_status ovmq_wh_quantize(const ovmq_wh* wh, ovmq_phase_fn f, void* user,
                             const char* label, ovmq_op** out) {
  if (auto st = require(wh && f && out, "null argument")) return st;
  return guarded([&] {
    *out = new ovmq_op{wh->v.quantize(wrap_phase_fn(f, user), label ? label : "A_f")};
  });
}

ovmq_status ovmq_wh_covariance_defect(const ovmq_wh* wh, ovmq_phase_fn f, void* user,
                                      double z0_re, double z0_im, int block, double* out) {
  if (auto st = require(wh && f && out, "null argument")) return st;
  return guarded([&] {
    *out = wh->v.covariance_defect(wrap_phase_fn(f, user), ovmq::Complex(z0_re, z0_im),
                                   block);
  });
}

ovmq_status ovmq_ho_shifts(const ovmq_weight* w, double* e0, double* em) {
  if (auto st = require(w && e0 && em, "null argument")) return st;
  return guarded([&] {
    const ovmq::HOShifts sh = ovmq::ho_shifts(w->v);
    *e0 = sh.ground;
    *em = sh.potential_min;
  });
}

ovmq_status ovmq_angle_operator_numeric(const ovmq_space* s, int n_radial, int n_angular,
                                        ovmq_op** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded(
      [&] { *out = new ovmq_op{ovmq::angle_operator_numeric(s->v, n_radial, n_angular)}; });
}

ovmq_status ovmq_angular_covariance_defect(const ovmq_space* s, double theta,
                                           double nu_phase, int n_radial, int n_angular,
                                           int block, double* out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    *out = ovmq::angular_covariance_defect(s->v, theta, nu_phase, ovmq::angle_function(),
                                           n_radial, n_angular, block);
  });
}

ovmq_status ovmq_thermal_s(double omega, double temperature, double* out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] { *out = ovmq::thermal_s(omega, temperature); });
}

ovmq_status ovmq_boltzmann_rho(const ovmq_space* s, double omega, double temperature,
                               ovmq_op** out, double* tail_mass) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] {
    ovmq::BoltzmannRho r = ovmq::boltzmann_rho(s->v, omega, temperature);
    if (tail_mass) *tail_mass = r.tail_mass;
    *out = new ovmq_op{std::move(r.rho)};
  });
}

ovmq_status ovmq_trace_duality_defect(const ovmq_space* s, const ovmq_quadrature* q,
                                      ovmq_phase_fn f, void* user, double s_re,
                                      double* out) {
  if (auto st = require(s && q && f && out, "null argument")) return st;
  return guarded([&] {
    *out = ovmq::trace_duality_defect(s->v, q->v, wrap_phase_fn(f, user),
                                      ovmq::Complex(s_re, 0.0));
  });
}

// ---- Berezin ----

ovmq_status ovmq_family_coherent(const ovmq_space* s, ovmq_family** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = new ovmq_family{ovmq::DisplacedFamily::coherent(s->v)}; });
}

ovmq_status ovmq_family_cahill_glauber(const ovmq_space* s, double cg_s,
                                       ovmq_family** out) {
  if (auto st = require(s && out, "null argument")) return st;
  return guarded(
      [&] { *out = new ovmq_family{ovmq::DisplacedFamily::cahill_glauber(s->v, cg_s)}; });
}

void ovmq_family_destroy(ovmq_family* f) { delete f; }

ovmq_status ovmq_overlap_kernel(const ovmq_family* rho_tilde, const ovmq_family* rho,
                                double z_re, double z_im, double zp_re, double zp_im,
                                double* out) {
  if (auto st = require(rho_tilde && rho && out, "null argument")) return st;
  return guarded([&] {
    *out = ovmq::overlap_kernel(rho_tilde->v, rho->v, ovmq::Complex(z_re, z_im),
                                ovmq::Complex(zp_re, zp_im));
  });
}

ovmq_status ovmq_lower_symbol(const ovmq_op* a, const ovmq_family* rho_tilde, double z_re,
                              double z_im, ovmq_complex* out) {
  if (auto st = require(a && rho_tilde && out, "null argument")) return st;
  return guarded([&] {
    const ovmq::Complex v =
        ovmq::lower_symbol(a->v, rho_tilde->v, ovmq::Complex(z_re, z_im));
    *out = {v.real(), v.imag()};
  });
}

ovmq_status ovmq_berezin_field_csv(ovmq_phase_fn f, void* user,
                                   const ovmq_family* rho_tilde, const ovmq_family* rho,
                                   const ovmq_quadrature* q, double re0, double re1,
                                   double im0, double im1, int n_re, int n_im, char** out) {
  if (auto st = require(f && rho_tilde && rho && q && out, "null argument")) return st;
  return guarded([&] {
    const ovmq::GridWindow window{re0, re1, im0, im1, n_re, n_im};
    const ovmq::SymbolField field =
        ovmq::berezin_transform(wrap_phase_fn(f, user), rho_tilde->v, rho->v, q->v, window);
    *out = dup_string(ovmq::field_to_csv(field));
  });
}

// ---- affine ----

ovmq_status ovmq_grid_geometric(double x_min, double x_max, int n, ovmq_grid** out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded(
      [&] { *out = new ovmq_grid{ovmq::HalfLineGrid::geometric(x_min, x_max, n)}; });
}

void ovmq_grid_destroy(ovmq_grid* g) { delete g; }

ovmq_status ovmq_grid_gaussian_selftest(const ovmq_grid* g, double* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = g->v.gaussian_selftest(); });
}

ovmq_status ovmq_fiducial_power_exp(double alpha, double lambda, const ovmq_grid* g,
                                    ovmq_fiducial** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] {
    *out = new ovmq_fiducial{ovmq::FiducialVector::power_exp(alpha, lambda, g->v)};
  });
}

void ovmq_fiducial_destroy(ovmq_fiducial* f) { delete f; }

ovmq_status ovmq_c_gamma(const ovmq_fiducial* f, double gamma, double* out) {
  if (auto st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = f->v.c_gamma(gamma); });
}

ovmq_status ovmq_kinetic_k(const ovmq_fiducial* f, double* k, int* selfadjoint_flag) {
  if (auto st = require(f && k, "null argument")) return st;
  *k = f->v.kinetic_k();
  if (selfadjoint_flag) *selfadjoint_flag = f->v.kinetic_selfadjoint() ? 1 : 0;
  return OVMQ_OK;
}

ovmq_status ovmq_moments_json(const ovmq_fiducial* f, const double* gammas, int n_gamma,
                              char** out) {
  if (auto st = require(f && gammas && out && n_gamma > 0, "null or empty argument"))
    return st;
  return guarded([&] {
    std::string s = "{\n  \"alpha\": " + ovmq::format_double(f->v.alpha()) +
                    ",\n  \"lambda\": " + ovmq::format_double(f->v.lambda()) +
                    ",\n  \"c_gamma\": {";
    for (int i = 0; i < n_gamma; ++i) {
      if (i) s += ", ";
      s += "\"" + ovmq::format_double(gammas[i]) +
           "\": " + ovmq::format_double(f->v.c_gamma(gammas[i]));
    }
    s += "},\n  \"K\": " + ovmq::format_double(f->v.kinetic_k()) +
         ",\n  \"K_geq_3_4\": " + (f->v.kinetic_selfadjoint() ? "true" : "false") + "\n}";
    *out = dup_string(s);
  });
}

ovmq_status ovmq_window_create(double q_min, double q_max, int n_q, double p_max, int n_p,
                               ovmq_window** out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] {
    *out = new ovmq_window{ovmq::HalfPlaneWindow::make(q_min, q_max, n_q, p_max, n_p)};
  });
}

void ovmq_window_destroy(ovmq_window* w) { delete w; }

ovmq_status ovmq_affine_cs_norm(const ovmq_fiducial* f, double q, double p, double* norm,
                                double* mass_deficit) {
  if (auto st = require(f && norm, "null argument")) return st;
  return guarded([&] {
    const ovmq::AffineCS cs = ovmq::affine_cs(q, p, f->v);
    *norm = cs.norm;
    if (mass_deficit) *mass_deficit = cs.mass_deficit;
  });
}

ovmq_status ovmq_affine_resolution_defect(const ovmq_fiducial* f, const ovmq_window* w,
                                          double* out) {
  if (auto st = require(f && w && out, "null argument")) return st;
  return guarded([&] {
    *out = ovmq::resolution_defect_affine(f->v, w->v, ovmq::resolution_test_functions(f->v));
  });
}

ovmq_status ovmq_affine_density_csv(const ovmq_fiducial* f, const ovmq_window* w,
                                    char** csv, double* mass, double* peak_q,
                                    double* peak_p) {
  if (auto st = require(f && w && csv, "null argument")) return st;
  return guarded([&] {
    const ovmq::DensityField field = ovmq::phase_space_density(
        f->v, f->v.values().cast<ovmq::Complex>(), w->v);
    *csv = dup_string(ovmq::density_to_csv(field));
    if (mass) *mass = field.mass;
    if (peak_q) *peak_q = field.peak_q;
    if (peak_p) *peak_p = field.peak_p;
  });
}

ovmq_status ovmq_affine_matrix_element(const ovmq_fiducial* f, const ovmq_window* w,
                                       ovmq_halfplane_fn fn, void* user, int phi1_index,
                                       int phi2_index, ovmq_complex* out) {
  if (auto st = require(f && w && fn && out, "null argument")) return st;
  return guarded([&] {
    const auto phis = ovmq::standard_test_functions(f->v.grid());
    const int n = static_cast<int>(phis.size());
    if (phi1_index < 0 || phi1_index >= n || phi2_index < 0 || phi2_index >= n)
      throw ovmq::InvalidArgument("phi index out of range");
    auto func = [fn, user](double q, double p) {
      double v = 0.0;
      if (fn(q, p, &v, user) != 0)
        throw ovmq::NodeEvaluationError("half-plane callback reported failure");
      return v;
    };
    const ovmq::Complex v = ovmq::quantize_affine_matrix_element(
        func, phis[phi1_index], phis[phi2_index], f->v, w->v);
    *out = {v.real(), v.imag()};
  });
}

ovmq_status ovmq_affine_operator_defects(const ovmq_fiducial* f, const ovmq_window* w,
                                         ovmq_affine_defects* out) {
  if (auto st = require(f && w && out, "null argument")) return st;
  return guarded([&] {
    const ovmq::AffineDefectReport r = ovmq::affine_operator_defects(f->v, w->v);
    out->moment_ratio_beta_half = r.moment_ratio_beta_half;
    out->moment_ratio_beta_1 = r.moment_ratio_beta_1;
    out->moment_ratio_beta_2 = r.moment_ratio_beta_2;
    out->p_defect = r.p_defect;
    out->kinetic_k = r.kinetic_k;
    out->kinetic_k_fit = r.kinetic_k_fit;
    out->kinetic_rel_err = r.kinetic_rel_err;
    out->resolution_defect = r.resolution_defect;
  });
}

// ---- sphere ----

ovmq_status ovmq_sphere_complexify(const double x[3], const double p[3], double a_re[3],
                                   double a_im[3]) {
  if (auto st = require(x && p && a_re && a_im, "null argument")) return st;
  return guarded([&] {
    const ovmq::SpherePhasePoint pt{Eigen::Vector3d(x[0], x[1], x[2]),
                                    Eigen::Vector3d(p[0], p[1], p[2])};
    const ovmq::ComplexSpherePoint a = ovmq::complexify(pt);
    for (int k = 0; k < 3; ++k) {
      a_re[k] = a.a[k].real();
      a_im[k] = a.a[k].imag();
    }
  });
}

ovmq_status ovmq_sphere_complex_angle(const double a_re[3], const double a_im[3],
                                      const double yhat[3], ovmq_complex* out) {
  if (auto st = require(a_re && a_im && yhat && out, "null argument")) return st;
  return guarded([&] {
    ovmq::ComplexSpherePoint a;
    for (int k = 0; k < 3; ++k) a.a[k] = ovmq::Complex(a_re[k], a_im[k]);
    const ovmq::Complex v =
        ovmq::complex_angle_cos(a, Eigen::Vector3d(yhat[0], yhat[1], yhat[2]));
    *out = {v.real(), v.imag()};
  });
}

ovmq_status ovmq_sphere_points_json(const double* xs, const double* ps, int n, char** out) {
  if (auto st = require(xs && ps && out && n > 0, "null or empty argument")) return st;
  return guarded([&] {
    std::vector<ovmq::SpherePhasePoint> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i)
      pts.push_back({Eigen::Vector3d(xs[3 * i], xs[3 * i + 1], xs[3 * i + 2]),
                     Eigen::Vector3d(ps[3 * i], ps[3 * i + 1], ps[3 * i + 2])});
    *out = dup_string(ovmq::points_to_json(pts));
  });
}

// ---- verify ----

ovmq_status ovmq_verify_run(const char* config_json, char** report_json, int* n_failed,
                            int* n_skipped) {
  if (auto st = require(report_json != nullptr, "report_json is null")) return st;
  return guarded([&] {
    const ovmq::VerifyConfig config = config_json
                                          ? ovmq::verify_config_from_json(config_json)
                                          : ovmq::VerifyConfig{};
    const ovmq::VerifyReport report = ovmq::run_verification(config);
    *report_json = dup_string(ovmq::report_to_json(config, report));
    if (n_failed) *n_failed = report.n_failed();
    if (n_skipped) *n_skipped = report.n_skipped();
  });
}

ovmq_status ovmq_default_config_json(char** out) {
  if (auto st = require(out != nullptr, "out is null")) return st;
  return guarded([&] { *out = dup_string(ovmq::verify_config_to_json(ovmq::VerifyConfig{})); });
}

}  // extern "C"
