#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ovmq/fock.hpp"
#include "ovmq/wh.hpp"

using namespace ovmq;

TEST_CASE("analytic angle matrix") {
  const FockSpace space(32);
  const FockOperator a = angle_operator_analytic(space);

  for (int n = 0; n < 32; ++n) CHECK(a.mat(n, n) == Complex(std::numbers::pi));

  // entry (0,1) = i Gamma(3/2) = i sqrt(pi)/2
  CHECK(std::abs(a.mat(0, 1) - Complex(0.0, std::sqrt(std::numbers::pi) / 2.0)) < 1e-14);
  CHECK(std::abs(a.mat(0, 1).imag() - 0.8862269254527580) < 1e-13);

  CHECK(hermiticity_defect(a.mat) < 1e-12);
}

TEST_CASE("action-angle quadrature reproduces the analytic matrix") {
  const FockSpace space(32);
  const FockOperator numeric = angle_operator_numeric(space, 120, 256);
  const FockOperator analytic = angle_operator_analytic(space);
  CHECK(block_max_diff(numeric.mat, analytic.mat, 16) < 1e-4);

  // diagonal is the constant pi
  CHECK(std::abs(numeric.mat.trace().real() / 32.0 - std::numbers::pi) < 1e-6);
}

TEST_CASE("truncated spectrum stays near [0, 2 pi]") {
  const FockSpace space(64);
  const auto eig = hermitian_eigenvalues(angle_operator_analytic(space).mat);
  CHECK(eig.minCoeff() > -0.15);
  CHECK(eig.maxCoeff() < 2.0 * std::numbers::pi + 0.15);
}

TEST_CASE("angular covariance of the angle quantization") {
  const FockSpace space(32);

  CHECK(angular_covariance_defect(space, 0.0, 0.0, angle_function(), 120, 256, 16) <
        1e-12);

  const double theta = std::numbers::pi / 3.0;
  CHECK(angular_covariance_defect(space, theta, 0.0, angle_function(), 120, 256, 16) <
        1e-4);

  // the nu phase cancels in the conjugation
  const double d0 = angular_covariance_defect(space, theta, 0.0, angle_function(), 120, 256, 16);
  const double d1 = angular_covariance_defect(space, theta, 2.718, angle_function(), 120, 256, 16);
  CHECK(std::abs(d0 - d1) < 1e-12);
}

TEST_CASE("smooth action-angle symbols quantize through the same path") {
  // f(J, gamma) = J is the oscillator energy; for the CS family the result is
  // N + 1 (anti-normal shift), same as the generic quantizer gives
  const FockSpace space(32);
  Eigen::VectorXd vac = Eigen::VectorXd::Zero(32);
  vac[0] = 1.0;
  ActionAngleFunction energy{[](double j, double) { return j; }, {}};
  const FockOperator aj = quantize_action_angle(space, vac, energy, 120, 256);
  const Matrix expected =
      number_operator(space).mat + Matrix::Identity(32, 32);
  CHECK(block_max_diff(aj.mat, expected, 16) < 1e-8);
}
