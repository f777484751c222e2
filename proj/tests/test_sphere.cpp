#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ovmq/errors.hpp"
#include "ovmq/sphere.hpp"

using namespace ovmq;

namespace {

SpherePhasePoint random_point(std::mt19937_64& rng, double j_max = 2.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> uj(0.0, j_max);
  Eigen::Vector3d x;
  do {
    x = Eigen::Vector3d(u(rng), u(rng), u(rng));
  } while (x.norm() < 1e-3);
  x.normalize();
  Eigen::Vector3d t;
  do {
    const Eigen::Vector3d raw(u(rng), u(rng), u(rng));
    t = raw - raw.dot(x) * x;
  } while (t.norm() < 1e-6);
  return {x, uj(rng) * t.normalized()};
}

}  // namespace

TEST_CASE("complexification") {
  SUBCASE("vanishing momentum gives the real point back") {
    const SpherePhasePoint pt{Eigen::Vector3d(0.0, 0.0, 1.0), Eigen::Vector3d::Zero()};
    const ComplexSpherePoint a = complexify(pt);
    CHECK(a.a(2) == Complex(1.0));
    CHECK(a.a(0) == Complex(0.0));
    CHECK(a.a(1) == Complex(0.0));
  }

  SUBCASE("unit momentum along y") {
    const SpherePhasePoint pt{Eigen::Vector3d(1.0, 0.0, 0.0), Eigen::Vector3d(0.0, 1.0, 0.0)};
    const ComplexSpherePoint a = complexify(pt);
    CHECK(std::abs(a.a(0) - Complex(std::cosh(1.0), 0.0)) < 1e-15);
    CHECK(std::abs(a.a(1) - Complex(0.0, std::sinh(1.0))) < 1e-15);
    CHECK(std::abs(a.a(2)) == 0.0);
    CHECK(std::abs(a.bilinear_square() - Complex(1.0)) < 1e-14);
  }

  SUBCASE("bilinear normalization over a random sweep") {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const ComplexSpherePoint a = complexify(random_point(rng));
      worst = std::max(worst, std::abs(a.bilinear_square() - Complex(1.0)));
    }
    CHECK(worst < 1e-10);
  }

  SUBCASE("tiny momenta go through the series branch") {
    const SpherePhasePoint pt{Eigen::Vector3d(1.0, 0.0, 0.0),
                              Eigen::Vector3d(0.0, 1e-9, 0.0)};
    const ComplexSpherePoint a = complexify(pt);
    CHECK(std::abs(a.bilinear_square() - Complex(1.0)) < 1e-14);
    CHECK(std::abs(a.a(1).imag() - 1e-9) < 1e-22);
  }

  SUBCASE("invariant violations are rejected") {
    CHECK_THROWS_AS(complexify({Eigen::Vector3d(1.1, 0.0, 0.0), Eigen::Vector3d::Zero()}),
                    InvalidArgument);
    CHECK_THROWS_AS(complexify({Eigen::Vector3d(1.0, 0.0, 0.0),
                                Eigen::Vector3d(0.5, 1.0, 0.0)}),
                    InvalidArgument);
  }
}

TEST_CASE("round trip recovers the phase point") {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const SpherePhasePoint pt = random_point(rng);
    const SpherePhasePoint back = decomplexify(complexify(pt));
    worst = std::max(worst, (back.x - pt.x).norm());
    worst = std::max(worst, (back.p - pt.p).norm());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("complex angle") {
  const SpherePhasePoint pt{Eigen::Vector3d(1.0, 0.0, 0.0), Eigen::Vector3d(0.0, 1.0, 0.0)};
  const ComplexSpherePoint a = complexify(pt);

  SUBCASE("aligned real case") {
    const ComplexSpherePoint real_pt =
        complexify({Eigen::Vector3d(1.0, 0.0, 0.0), Eigen::Vector3d::Zero()});
    CHECK(std::abs(complex_angle_cos(real_pt, Eigen::Vector3d(1.0, 0.0, 0.0)) -
                   Complex(1.0)) < 1e-15);
  }

  SUBCASE("orthogonal direction") {
    CHECK(std::abs(complex_angle_cos(a, Eigen::Vector3d(0.0, 0.0, 1.0))) == 0.0);
  }

  SUBCASE("cauchy-schwarz style bound") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 200; ++t) {
      const SpherePhasePoint p2 = random_point(rng);
      const ComplexSpherePoint a2 = complexify(p2);
      Eigen::Vector3d y;
      do {
        y = Eigen::Vector3d(u(rng), u(rng), u(rng));
      } while (y.norm() < 1e-3);
      y.normalize();
      CHECK(std::abs(complex_angle_cos(a2, y)) <= std::cosh(p2.j()) + 1e-12);
    }
  }

  SUBCASE("bilinearity on raw vectors") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
      const Eigen::Vector3cd y1(Complex(u(rng), 0), Complex(u(rng), 0), Complex(u(rng), 0));
      const Eigen::Vector3cd y2(Complex(u(rng), 0), Complex(u(rng), 0), Complex(u(rng), 0));
      const double al = u(rng), be = u(rng);
      const Complex lhs = bilinear_dot(a.a, (al * y1 + be * y2).eval());
      const Complex rhs = al * bilinear_dot(a.a, y1) + be * bilinear_dot(a.a, y2);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }

  SUBCASE("non-unit directions are rejected") {
    CHECK_THROWS_AS(complex_angle_cos(a, Eigen::Vector3d(0.0, 0.0, 2.0)), InvalidArgument);
  }
}

TEST_CASE("sphere mesh weights cover the full solid angle") {
  const SphereMesh mesh = SphereMesh::gauss(24, 48);
  CHECK(std::abs(mesh.w.sum() - 4.0 * std::numbers::pi) < 1e-10);
  for (int i = 0; i < mesh.size(); ++i)
    CHECK(std::abs(mesh.points.row(i).norm() - 1.0) < 1e-14);
}

TEST_CASE("separable state assembly") {
  const HalfLineGrid grid = HalfLineGrid::geometric(1e-6, 80.0, 1024);
  const FiducialVector psi = FiducialVector::power_exp(2.0, 1.0, grid);
  const SphereMesh mesh = SphereMesh::gauss(16, 32);

  SUBCASE("radial wavelet over r with the uniform angular profile has unit norm") {
    Eigen::VectorXcd radial(grid.size());
    for (int j = 0; j < grid.size(); ++j) radial[j] = psi.values()[j] / grid.x[j];
    const Eigen::VectorXcd angular =
        Eigen::VectorXcd::Constant(mesh.size(), 1.0 / std::sqrt(4.0 * std::numbers::pi));
    const SeparableState state = assemble_separable_state(radial, grid, angular, mesh);
    CHECK(std::abs(state.norm() - 1.0) < 1e-6);
  }

  SUBCASE("zero angular part gives the zero state") {
    const Eigen::VectorXcd radial = Eigen::VectorXcd::Ones(grid.size());
    const Eigen::VectorXcd angular = Eigen::VectorXcd::Zero(mesh.size());
    const SeparableState state = assemble_separable_state(radial, grid, angular, mesh);
    CHECK(state.norm() == 0.0);
  }

  SUBCASE("norm multiplicativity for random factor pairs") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.2, 1.5);
    for (int t = 0; t < 5; ++t) {
      const double a = u(rng), b = u(rng);
      const Eigen::VectorXcd radial = sample_on_grid(
          grid, [a](double r) { return Complex(std::exp(-a * r) * r); });
      Eigen::VectorXcd angular(mesh.size());
      for (int m = 0; m < mesh.size(); ++m)
        angular[m] = Complex(1.0 + b * mesh.points(m, 2), 0.3 * mesh.points(m, 0));
      const SeparableState state = assemble_separable_state(radial, grid, angular, mesh);

      double radial_sq = 0.0;
      for (int j = 0; j < grid.size(); ++j)
        radial_sq += grid.w[j] * std::norm(grid.x[j] * radial[j]);
      double angular_sq = 0.0;
      for (int m = 0; m < mesh.size(); ++m) angular_sq += mesh.w[m] * std::norm(angular[m]);
      CHECK(std::abs(state.norm() - std::sqrt(radial_sq * angular_sq)) < 1e-10);
    }
  }

  SUBCASE("grid mismatches are rejected") {
    const Eigen::VectorXcd radial = Eigen::VectorXcd::Ones(grid.size() - 1);
    const Eigen::VectorXcd angular = Eigen::VectorXcd::Ones(mesh.size());
    CHECK_THROWS_AS(assemble_separable_state(radial, grid, angular, mesh),
                    GridMismatchError);
  }
}

TEST_CASE("complexified points export as json") {
  std::mt19937_64 rng(9);
  std::vector<SpherePhasePoint> pts;
  for (int t = 0; t < 3; ++t) pts.push_back(random_point(rng));
  const std::string doc = points_to_json(pts);
  CHECK(doc.find("\"points\"") != std::string::npos);
  CHECK(doc.find("\"bilinear_square\"") != std::string::npos);
}
