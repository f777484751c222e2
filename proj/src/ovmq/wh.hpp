#pragma once

#include <functional>
#include <vector>

#include "ovmq/fock.hpp"
#include "ovmq/phase_quadrature.hpp"
#include "ovmq/weights.hpp"

namespace ovmq {

using PhaseFunction = std::function<Complex(Complex)>;

// M = sum_k w_k w(z_k) D(z_k), the quadrature route.  Throws
// IntegrabilityError for Cahill-Glauber weights with Re s >= 0, where no
// convergent quadrature exists and the analytic form must be used.
FockOperator build_m(const FockSpace& space, const WeightFunction& w,
                     const PhaseSpaceQuadrature& quad);

// Diagonal closed form of the Cahill-Glauber M_s,
//   <e_n|M_s|e_n> = 2/(1-s) ((s+1)/(s-1))^n,
// valid for Re s < 1 (s = 0 gives 2*parity, s -> -1 the vacuum projector).
FockOperator cg_m_analytic(const FockSpace& space, Complex s);

// s(T) = -coth(omega / 2T) in hbar = k_B = 1 units; T = 0 maps to -1.
double thermal_s(double omega, double temperature);

struct BoltzmannRho {
  FockOperator rho;
  double tail_mass;  // geometric mass beyond the truncation
};

// Gibbs diagonal (1 - e^{-omega/T}) e^{-n omega/T}; equals
// cg_m_analytic(thermal_s(omega, T)) entrywise.
BoltzmannRho boltzmann_rho(const FockSpace& space, double omega, double temperature);

// Covariant quantizer f -> A_f = sum_k w_k f(z_k) M(z_k).  M comes from the
// analytic diagonal for Cahill-Glauber weights and from build_m otherwise;
// node evaluations are independent and side-effect free, the reduction is an
// unordered sum.
class WHQuantizer {
 public:
  WHQuantizer(const FockSpace& space, WeightFunction weight, PhaseSpaceQuadrature quad);

  const FockSpace& space() const { return space_; }
  const WeightFunction& weight() const { return weight_; }
  const PhaseSpaceQuadrature& quad() const { return quad_; }
  const FockOperator& m_operator() const { return m_; }

  FockOperator displaced_m(Complex z) const;

  // max-norm of sum_k w_k M(z_k) - I on the safe block (block < 0 => dim/2)
  double resolution_defect(int block = -1) const;

  FockOperator quantize(const PhaseFunction& f, const std::string& label = "A_f") const;

  // safe-block norm of A_{f(.-z0)} - D(z0) A_f D(z0)^dag
  double covariance_defect(const PhaseFunction& f, Complex z0, int block = -1) const;

 private:
  FockSpace space_;
  WeightFunction weight_;
  PhaseSpaceQuadrature quad_;
  FockOperator m_;
  bool m_diagonal_ = false;
  bool m_rank_one_vacuum_ = false;  // M = |e_0><e_0| (CS quantizer)
};

// |tr(A_f^dag A_f) - sum_k w_k |f(z_k)|^2| for the unimodular-weight case
// (A_f built from the analytic M_s with |w_s| = 1, s = 0 by default).
double trace_duality_defect(const FockSpace& space, const PhaseSpaceQuadrature& quad,
                            const PhaseFunction& f, Complex s = Complex(0.0, 0.0));

// ---- action-angle quantization (diagonal M) ----

// f(J, gamma), 2pi-periodic in gamma.  Discontinuity locations in [0, 2pi)
// must be declared so the angular integration can split panels there; smooth
// functions leave `jumps` empty.
struct ActionAngleFunction {
  std::function<double(double, double)> eval;
  std::vector<double> jumps;
};

// The 2pi-periodic angle function gimel(gamma) = gamma on [0, 2pi), shifted
// by theta: value ((gamma - theta) mod 2pi), jump at theta.
ActionAngleFunction angle_function(double theta = 0.0);

// A_f = int dJ int dgamma/2pi f(J,gamma) M(sqrt(J) e^{i gamma}) for diagonal
// M with diag m_diag.  Radial Gauss-Laguerre of order n_radial; angular
// integration by composite Gauss-Legendre panels split at declared jumps
// (n_angular nodes total), exact for the smooth pieces.
FockOperator quantize_action_angle(const FockSpace& space, const Eigen::VectorXd& m_diag,
                                   const ActionAngleFunction& f, int n_radial,
                                   int n_angular, const std::string& label = "A_aa");

// A_gimel = pi I + i sum_{n != n'} Gamma((n+n')/2 + 1)/(sqrt(n! n'!)(n'-n)) |e_n><e_n'|
FockOperator angle_operator_analytic(const FockSpace& space);

// Action-angle quadrature of the angle function against the coherent-state
// family (M = |e_0><e_0|).
FockOperator angle_operator_numeric(const FockSpace& space, int n_radial = 120,
                                    int n_angular = 256);

// Safe-block norm of U(theta) A_f U(-theta) - A_{f(J, gamma - theta)} with
// U(theta) = diag(e^{i(n + nu_phase) theta}), for a diagonal-M quantizer
// (defaults to the CS one).
double angular_covariance_defect(const FockSpace& space, double theta, double nu_phase,
                                 const ActionAngleFunction& f, int n_radial = 120,
                                 int n_angular = 256, int block = -1,
                                 const Eigen::VectorXd* m_diag = nullptr);

}  // namespace ovmq
