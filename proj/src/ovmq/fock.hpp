#pragma once

#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace ovmq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Truncated number basis |e_0> ... |e_{dim-1}>.
struct FockSpace {
  int dim;

  explicit FockSpace(int d);
};

// Dense operator on the truncated basis.  All entries must stay finite;
// identities inherited from the untruncated algebra are only asserted on a
// "safe block" (top-left dim/2 by default) away from the truncation edge.
struct FockOperator {
  Matrix mat;
  std::string label;

  int dim() const { return static_cast<int>(mat.rows()); }
};

struct StateVector {
  Vector coeffs;
  std::string label;

  int dim() const { return static_cast<int>(coeffs.size()); }
  double norm() const { return coeffs.norm(); }
};

enum class DisplacementMethod {
  closed_form,   // exact untruncated matrix elements, projected
  exponential,   // matrix exponential of the truncated generator (unitary)
};

FockOperator annihilation(const FockSpace& space);
FockOperator creation(const FockSpace& space);
FockOperator number_operator(const FockSpace& space);

// (Q, P) with Q = (a + a^dag)/sqrt(2), P = (a - a^dag)/(i sqrt(2)).
std::pair<FockOperator, FockOperator> quadrature_pair(const FockSpace& space);

FockOperator parity(const FockSpace& space);

FockOperator displacement(const FockSpace& space, Complex z,
                          DisplacementMethod method = DisplacementMethod::closed_form);

// Coefficients e^{-|z|^2/2} z^n / sqrt(n!), n < dim.  The truncated norm is
// carried on the returned state, never silently renormalized.
StateVector coherent_state(const FockSpace& space, Complex z);

// Squared-norm mass of the coherent state lost to the truncation.
double coherent_tail_mass(Complex z, int dim);

// ---- matrix utilities ----

int default_safe_block(int dim);

double block_max_abs(const Matrix& a, int block);
double block_max_diff(const Matrix& a, const Matrix& b, int block);

// max |A - A^dag| entry
double hermiticity_defect(const Matrix& a);

// Ascending eigenvalues of a (numerically) Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& a);

struct DensityDiagnostics {
  double hermiticity_defect;
  double min_eigenvalue;
  double trace_defect;  // |tr - 1|

  bool ok(double tau_herm = 1e-10, double tau_psd = 1e-10, double tau_tr = 1e-10) const {
    return hermiticity_defect <= tau_herm && min_eigenvalue >= -tau_psd &&
           trace_defect <= tau_tr;
  }
};

DensityDiagnostics density_diagnostics(const FockOperator& rho);

}  // namespace ovmq
