#pragma once

#include <functional>
#include <vector>

#include "ovmq/fock.hpp"

namespace ovmq {

// Quadrature grid on the half-line (0, X_max].  Geometric spacing is the
// default: dilated wavelets concentrate near x = 0, and the trapezoid rule in
// log x is a sinc rule there (boundary-driven error only).
struct HalfLineGrid {
  enum class Spacing { geometric, uniform };

  Eigen::VectorXd x;
  Eigen::VectorXd w;  // trapezoid weights for integral_0^Xmax f dx
  Spacing spacing;

  static HalfLineGrid geometric(double x_min, double x_max, int n);
  static HalfLineGrid uniform(double x_max, int n);

  int size() const { return static_cast<int>(x.size()); }

  double integrate(const Eigen::VectorXd& vals) const { return w.dot(vals); }
  Complex integrate(const Eigen::VectorXcd& vals) const;

  // |quadrature - erf truth| for a reference Gaussian bump inside the grid.
  double gaussian_selftest() const;
};

// evaluates a function on grid nodes
Eigen::VectorXcd sample_on_grid(const HalfLineGrid& grid,
                                const std::function<Complex(double)>& f);

// Half-line wavelet psi with cached moment constants
//   c_gamma = integral |psi|^2 dx / x^{2+gamma}
// and the kinetic constant K = integral (psi')^2 x dx / c_{-1}.
class FiducialVector {
 public:
  // psi(x) = C x^alpha e^{-lambda x / 2}, unit norm by construction; requires
  // alpha > 3/2 so that c_1, c_0, c_{-1} and K all exist.
  static FiducialVector power_exp(double alpha, double lambda, HalfLineGrid grid);

  // Arbitrary samples; normalized to unit grid norm on construction.
  static FiducialVector sampled(Eigen::VectorXd values, HalfLineGrid grid);

  const HalfLineGrid& grid() const { return grid_; }
  const Eigen::VectorXd& values() const { return values_; }
  bool is_power_exp() const { return power_exp_; }
  double alpha() const { return alpha_; }
  double lambda() const { return lambda_; }

  // psi at arbitrary x: analytic for the power-exp family, linear
  // interpolation for sampled data.
  double eval(double x) const;

  double norm() const { return norm_; }

  // Throws DivergentMomentError when the power-exp exponent condition
  // 2 alpha - 1 - gamma > 0 fails.
  double c_gamma(double gamma) const;

  double kinetic_k() const { return kinetic_k_; }
  // K >= 3/4: the regularized kinetic operator is essentially self-adjoint.
  bool kinetic_selfadjoint() const { return kinetic_k_ >= 0.75; }

 private:
  FiducialVector(HalfLineGrid grid) : grid_(std::move(grid)) {}
  void finish_construction();

  HalfLineGrid grid_;
  Eigen::VectorXd values_;
  bool power_exp_ = false;
  double alpha_ = 0.0, lambda_ = 0.0;
  double norm_ = 0.0;
  double c_minus1_ = 0.0;
  double kinetic_k_ = 0.0;
};

// |q,p> = U(q,p)|psi> sampled on the grid; the squared-norm mass lost past
// X_max under dilation is reported, not hidden.
struct AffineCS {
  double q, p;
  Eigen::VectorXcd values;
  double norm;
  double mass_deficit;  // 1 - norm^2
};

AffineCS affine_cs(double q, double p, const FiducialVector& psi);

// Quadrature window on the half-plane: q log-spaced, p uniform.
struct HalfPlaneWindow {
  Eigen::VectorXd q, wq;
  Eigen::VectorXd p, wp;

  static HalfPlaneWindow make(double q_min, double q_max, int nq, double p_max, int np);

  int nq() const { return static_cast<int>(q.size()); }
  int np() const { return static_cast<int>(p.size()); }
};

// integral g(x) e^{-ipx} dx for every p, treating g as piecewise linear on
// the grid and integrating the oscillation exactly per cell (Filon-type
// trapezoid; plain node sums alias once p x exceeds pi over the local
// spacing).
Eigen::VectorXcd filon_fourier(const HalfLineGrid& grid, const Eigen::VectorXcd& g,
                               const Eigen::VectorXd& p);

// <q,p|phi> for one window row per q: row (i, k) = <q_i, p_k | phi>.
Eigen::MatrixXcd overlap_rows(const FiducialVector& psi, const Eigen::VectorXcd& phi,
                              const HalfPlaneWindow& win);

Complex cs_overlap(double q, double p, const FiducialVector& psi,
                   const Eigen::VectorXcd& phi);

// sum over the window of f(q,p) <phi1|q,p><q,p|phi2> / (2 pi c_{-1}),
// evaluated from precomputed overlap tables.
Complex affine_element_from_overlaps(const Eigen::MatrixXcd& o1, const Eigen::MatrixXcd& o2,
                                     const HalfPlaneWindow& win, double c_minus1,
                                     const std::function<double(double, double)>& f);

Complex quantize_affine_matrix_element(const std::function<double(double, double)>& f,
                                       const Eigen::VectorXcd& phi1,
                                       const Eigen::VectorXcd& phi2,
                                       const FiducialVector& psi, const HalfPlaneWindow& win);

// max_i |sum_window |<q,p|phi_i>|^2/(2 pi c_{-1}) - ||phi_i||^2|, the
// weak-sense resolution-of-identity defect over a set of test functions.
double resolution_defect_affine(const FiducialVector& psi, const HalfPlaneWindow& win,
                                const std::vector<Eigen::VectorXcd>& test_functions);

struct DensityField {
  HalfPlaneWindow window;
  Eigen::MatrixXd rho;  // (nq x np)
  double mass;
  double peak_q, peak_p;
};

// rho_phi(q,p) = |<q,p|phi>|^2 / (2 pi c_{-1})
DensityField phase_space_density(const FiducialVector& psi, const Eigen::VectorXcd& phi,
                                 const HalfPlaneWindow& win);

// CSV with columns q,p,rho.
std::string density_to_csv(const DensityField& field);

// Weak-form checks of the quantized-operator identities over the built-in
// test-function pairs: A_{q^beta} against (c_{beta-1}/c_{-1}) x^beta,
// A_p against -i d/dx, and the x^{-2} coefficient of A_{p^2} - P^2 fitted
// against K(psi).
struct AffineDefectReport {
  double moment_ratio_beta_half;
  double moment_ratio_beta_1;
  double moment_ratio_beta_2;
  double p_defect;
  double kinetic_k;
  double kinetic_k_fit;
  double kinetic_rel_err;
  double resolution_defect;  // psi, x*psi (renormalized) and a generic bump
};

AffineDefectReport affine_operator_defects(const FiducialVector& psi,
                                           const HalfPlaneWindow& win);

// the three test functions used by the resolution-of-identity defect
std::vector<Eigen::VectorXcd> resolution_test_functions(const FiducialVector& psi);

// Central differences on the (possibly nonuniform) grid, one-sided at edges.
Eigen::VectorXcd grid_derivative(const HalfLineGrid& grid, const Eigen::VectorXcd& f);
Eigen::VectorXcd grid_second_derivative(const HalfLineGrid& grid, const Eigen::VectorXcd& f);

// integral conj(a) b dx
Complex grid_inner(const HalfLineGrid& grid, const Eigen::VectorXcd& a,
                   const Eigen::VectorXcd& b);

// Normalized x^a e^{-b x} bumps used by the weak-form operator checks.
std::vector<Eigen::VectorXcd> standard_test_functions(const HalfLineGrid& grid);

}  // namespace ovmq
