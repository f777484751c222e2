#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ovmq/errors.hpp"
#include "ovmq/fock.hpp"

using namespace ovmq;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("ladder operators act on the number basis") {
  const FockSpace space(2);
  const Matrix a = annihilation(space).mat;
  CHECK(a(0, 0) == Complex(0.0));
  CHECK(a(0, 1) == Complex(1.0));
  CHECK(a(1, 0) == Complex(0.0));
  CHECK(a(1, 1) == Complex(0.0));

  const FockSpace big(16);
  const Matrix ab = annihilation(big).mat;
  Vector e0 = Vector::Zero(16);
  e0[0] = 1.0;
  CHECK((ab * e0).norm() == 0.0);  // a|e_0> = 0

  const Matrix n = (ab.adjoint() * ab).eval();
  for (int k = 0; k < 16; ++k) CHECK(n(k, k).real() == doctest::Approx(k).epsilon(1e-15));
  CHECK(block_max_diff(n, number_operator(big).mat, 16) < 1e-13);
}

TEST_CASE("quadrature pair") {
  const FockSpace space(2);
  const auto [q, p] = quadrature_pair(space);
  CHECK(std::abs(q.mat(0, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(q.mat(1, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);

  const FockSpace big(32);
  const auto [qb, pb] = quadrature_pair(big);
  CHECK(hermiticity_defect(qb.mat) < 1e-14);
  CHECK(hermiticity_defect(pb.mat) < 1e-14);

  // truncated ccr: [Q, P] = i I away from the truncation edge
  Matrix comm = qb.mat * pb.mat - pb.mat * qb.mat;
  comm -= kI * Matrix::Identity(32, 32);
  CHECK(block_max_abs(comm, 31) < 1e-12);
  // the last diagonal entry is the truncation artifact
  CHECK(std::abs(comm(31, 31)) > 1.0);
}

TEST_CASE("parity operator") {
  const FockSpace space(3);
  const Matrix p = parity(space).mat;
  CHECK(p(0, 0) == Complex(1.0));
  CHECK(p(1, 1) == Complex(-1.0));
  CHECK(p(2, 2) == Complex(1.0));

  const FockSpace big(24);
  const Matrix pb = parity(big).mat;
  CHECK(block_max_diff((pb * pb).eval(), Matrix::Identity(24, 24), 24) == 0.0);

  // P a P = -a, direct matrix-product oracle
  const Matrix a = annihilation(big).mat;
  CHECK(block_max_diff((pb * a * pb).eval(), (-a).eval(), 24) == 0.0);
}

TEST_CASE("displacement at z = 0 is the identity") {
  const FockSpace space(12);
  for (auto method : {DisplacementMethod::closed_form, DisplacementMethod::exponential}) {
    const Matrix d = displacement(space, 0.0, method).mat;
    CHECK(block_max_diff(d, Matrix::Identity(12, 12), 12) < 1e-12);
  }
}

TEST_CASE("displacement column 0 matches the power-series oracle") {
  const FockSpace space(32);
  for (Complex z : {Complex(0.7, -0.3), Complex(-1.1, 0.4), Complex(0.0, 1.3)}) {
    const Matrix d = displacement(space, z).mat;
    const Vector oracle = oracles::series_displaced_vacuum(32, z);
    CHECK((d.col(0) - oracle).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("displacement addition formula on the safe block") {
  const FockSpace space(48);
  const Complex z(0.8, -0.35), zp(-0.5, 0.6);
  const Matrix lhs = displacement(space, z).mat * displacement(space, zp).mat;
  const Complex phase = std::exp(0.5 * (z * std::conj(zp) - std::conj(z) * zp));
  const Matrix rhs = phase * displacement(space, z + zp).mat;
  CHECK(block_max_diff(lhs, rhs, 24) < 1e-8);
}

TEST_CASE("closed form and exponential displacement agree where truncation is safe") {
  // The coupling through the truncation edge decays exponentially with dim at
  // fixed |z|^2/dim; the 1e-8 block agreement is reached from dim = 48 on.
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int dim : {48, 64, 96}) {
    const FockSpace space(dim);
    for (int t = 0; t < 3; ++t) {
      const double rho = std::sqrt(dim / 8.0 * u(rng));
      const double th = 2.0 * M_PI * u(rng);
      const Complex z(rho * std::cos(th), rho * std::sin(th));
      const Matrix closed = displacement(space, z, DisplacementMethod::closed_form).mat;
      const Matrix expm = displacement(space, z, DisplacementMethod::exponential).mat;
      CHECK(block_max_diff(closed, expm, dim / 2) < 1e-8);
    }
  }

  // measured envelope below that; regression-pinned, not a contract
  for (auto [dim, bound] : {std::pair{16, 3e-4}, std::pair{32, 3e-6}}) {
    const FockSpace space(dim);
    const Complex z(std::sqrt(dim / 8.0), 0.0);
    const Matrix closed = displacement(space, z, DisplacementMethod::closed_form).mat;
    const Matrix expm = displacement(space, z, DisplacementMethod::exponential).mat;
    CHECK(block_max_diff(closed, expm, dim / 2) < bound);
  }
}

TEST_CASE("exponential displacement is unitary, closed form only approximately") {
  const FockSpace space(24);
  const Complex z(1.4, -0.9);
  const Matrix de = displacement(space, z, DisplacementMethod::exponential).mat;
  CHECK(block_max_diff((de * de.adjoint()).eval(), Matrix::Identity(24, 24), 24) < 1e-12);

  const Matrix dc = displacement(space, z, DisplacementMethod::closed_form).mat;
  const double full_defect =
      block_max_diff((dc * dc.adjoint()).eval(), Matrix::Identity(24, 24), 24);
  CHECK(full_defect > 1e-10);  // truncation breaks exact unitarity
  // at small |z| the lost column tail is negligible again
  const Matrix ds = displacement(space, Complex(0.4, -0.2)).mat;
  CHECK(block_max_diff((ds * ds.adjoint()).eval(), Matrix::Identity(24, 24), 12) < 1e-10);
}

TEST_CASE("parity conjugates displacement to the opposite argument") {
  const FockSpace space(20);
  const Matrix p = parity(space).mat;
  for (Complex z : {Complex(0.4, 0.2), Complex(-0.9, 1.1)}) {
    const Matrix lhs = p * displacement(space, z).mat * p;
    const Matrix rhs = displacement(space, -z).mat;
    CHECK(block_max_diff(lhs, rhs, 20) < 1e-13);
  }
}

TEST_CASE("displacement rejects non-finite arguments") {
  const FockSpace space(8);
  CHECK_THROWS_AS(displacement(space, Complex(std::nan(""), 0.0)), InvalidArgument);
  CHECK_THROWS_AS(displacement(space, Complex(0.0, INFINITY)), InvalidArgument);
}

TEST_CASE("coherent state") {
  const FockSpace space(64);

  SUBCASE("z = 0 is the vacuum") {
    const StateVector v = coherent_state(space, 0.0);
    CHECK(v.coeffs[0] == Complex(1.0));
    CHECK(v.coeffs.tail(63).norm() == 0.0);
  }

  SUBCASE("overlaps reproduce the gaussian oracle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 20; ++t) {
      const Complex z(u(rng), u(rng));
      const Complex zp(u(rng), u(rng));
      const Vector a = coherent_state(space, z).coeffs;
      const Vector b = coherent_state(space, zp).coeffs;
      CHECK(std::abs(std::norm(a.dot(b)) - oracles::gaussian_overlap_sq(z, zp)) < 1e-10);
    }
  }

  SUBCASE("squared moduli follow the poisson distribution") {
    const Complex z(1.2, -0.7);
    const StateVector v = coherent_state(space, z);
    for (int n = 0; n < 40; ++n)
      CHECK(std::abs(std::norm(v.coeffs[n]) - oracles::poisson_pn(std::norm(z), n)) < 1e-14);
  }

  SUBCASE("norm is reported, not renormalized") {
    const StateVector v = coherent_state(space, Complex(6.0, 0.0));  // |z|^2 = 36
    CHECK(v.norm() < 1.0);
    CHECK(std::abs(v.norm() * v.norm() + coherent_tail_mass(Complex(6.0, 0.0), 64) - 1.0) <
          1e-12);
  }
}

TEST_CASE("density diagnostics") {
  const FockSpace space(8);
  Matrix rho = Matrix::Zero(8, 8);
  rho(0, 0) = 0.75;
  rho(1, 1) = 0.25;
  const DensityDiagnostics ok = density_diagnostics({rho, "rho"});
  CHECK(ok.ok());

  rho(1, 1) = -0.25;
  rho(0, 0) = 1.25;
  const DensityDiagnostics bad = density_diagnostics({rho, "rho"});
  CHECK_FALSE(bad.ok());
  CHECK(bad.min_eigenvalue == doctest::Approx(-0.25));
}

TEST_CASE("space dimension is validated") {
  CHECK_THROWS_AS(FockSpace(1), InvalidArgument);
  CHECK_THROWS_AS(FockSpace(0), InvalidArgument);
}
