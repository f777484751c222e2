#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ovmq/errors.hpp"
#include "ovmq/weights.hpp"

using namespace ovmq;

TEST_CASE("cahill-glauber weight basics") {
  const WeightFunction w = WeightFunction::cahill_glauber(Complex(-1.0, 0.0));
  CHECK(w(Complex(0.0, 0.0)) == Complex(1.0));
  CHECK(std::abs(w(Complex(1.0, 1.0)) - std::exp(-1.0)) < 1e-15);
  CHECK(w.real_even());
  CHECK(w.reflection_real());
  CHECK(w.dz_dzbar_at_zero() == Complex(-0.5, 0.0));

  const WeightFunction wc = WeightFunction::cahill_glauber(Complex(-2.0, 0.6));
  CHECK(wc.real_even());
  CHECK_FALSE(wc.reflection_real());

  CHECK_THROWS_AS(WeightFunction::cahill_glauber(Complex(1.0, 0.0)), InvalidArgument);
  CHECK_THROWS_AS(WeightFunction::cahill_glauber(Complex(1.5, 0.0)), InvalidArgument);
}

TEST_CASE("custom weights must be normalized at the origin") {
  CHECK_THROWS_AS(
      WeightFunction::custom([](Complex) { return Complex(0.9); }, true, true),
      InvalidArgument);
  const WeightFunction ok = WeightFunction::custom(
      [](Complex z) { return std::exp(-std::norm(z)); }, true, true, "gauss");
  CHECK(ok(Complex(0.0, 0.0)) == Complex(1.0));
}

TEST_CASE("finite-difference second derivative matches the analytic one") {
  // w(z) = (1 + a J + b J^2) e^{-cJ} has dzdzbar at 0 equal to a - c
  const double a = 0.3, b = -0.2, c = 1.4;
  const WeightFunction w = WeightFunction::custom(
      [=](Complex z) {
        const double j = std::norm(z);
        return (1.0 + a * j + b * j * j) * std::exp(-c * j);
      },
      true, true);
  CHECK(std::abs(w.dz_dzbar_at_zero().real() - (a - c)) < 1e-7);
}

TEST_CASE("oscillator shifts") {
  SUBCASE("coherent-state weight") {
    const HOShifts sh = ho_shifts(WeightFunction::cahill_glauber(Complex(-1.0, 0.0)));
    CHECK(sh.ground == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sh.potential_min == doctest::Approx(0.5).epsilon(1e-14));
  }

  SUBCASE("constant weight") {
    const WeightFunction flat =
        WeightFunction::custom([](Complex) { return Complex(1.0); }, true, true, "flat");
    const HOShifts sh = ho_shifts(flat);
    CHECK(std::abs(sh.ground - 0.5) < 1e-9);
    CHECK(std::abs(sh.potential_min) < 1e-9);
  }

  SUBCASE("half quantum is weight-independent") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(-0.5, 0.5), uc(0.5, 2.0);
    for (int t = 0; t < 20; ++t) {
      const double a = ua(rng), b = ua(rng), c = uc(rng);
      const WeightFunction w = WeightFunction::custom(
          [=](Complex z) {
            const double j = std::norm(z);
            return (1.0 + a * j + b * j * j) * std::exp(-c * j);
          },
          true, true);
      const HOShifts sh = ho_shifts(w);
      CHECK(std::abs((sh.ground - sh.potential_min) - 0.5) < 1e-15);
    }
  }
}
