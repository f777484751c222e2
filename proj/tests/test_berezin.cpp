#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ovmq/berezin.hpp"
#include "ovmq/errors.hpp"

using namespace ovmq;

namespace {

Complex f_q(Complex z) { return std::sqrt(2.0) * z.real(); }
Complex f_p(Complex z) { return std::sqrt(2.0) * z.imag(); }

const FockSpace& space64() {
  static FockSpace s(64);
  return s;
}

const PhaseSpaceQuadrature& quad_ref() {
  static PhaseSpaceQuadrature q(80, 64);
  return q;
}

}  // namespace

TEST_CASE("overlap kernel of coherent families") {
  const DisplacedFamily cs = DisplacedFamily::coherent(space64());

  const Complex z(0.7, -0.4);
  CHECK(std::abs(overlap_kernel(cs, cs, z, z) - 1.0) < 1e-12);

  // |z - z'| = 1 gives e^{-1}
  const Complex zp = z + Complex(0.6, 0.8);
  CHECK(std::abs(overlap_kernel(cs, cs, z, zp) - std::exp(-1.0)) < 1e-8);

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 25; ++t) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    CHECK(std::abs(overlap_kernel(cs, cs, a, b) - oracles::gaussian_overlap_sq(a, b)) <
          1e-10);
  }
}

TEST_CASE("kernel row sums to one over the quadrature") {
  const DisplacedFamily cs = DisplacedFamily::coherent(space64());
  const Complex z(0.5, 0.3);
  double acc = 0.0;
  for (int i = 0; i < quad_ref().n_radial(); ++i)
    for (int k = 0; k < quad_ref().n_angular(); ++k)
      acc += quad_ref().weight(i) * overlap_kernel(cs, cs, z, quad_ref().node(i, k));
  CHECK(std::abs(acc - 1.0) < 1e-6);
}

TEST_CASE("kernel positivity across mixed families") {
  const DisplacedFamily cs = DisplacedFamily::coherent(space64());
  const DisplacedFamily thermal = DisplacedFamily::cahill_glauber(space64(), -2.5);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 16; ++t) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    CHECK(overlap_kernel(thermal, cs, a, b) >= -1e-10);
    CHECK(overlap_kernel(thermal, thermal, a, b) >= -1e-10);
  }
  CHECK_THROWS_AS(DisplacedFamily::cahill_glauber(space64(), -0.5), InvalidArgument);
}

TEST_CASE("lower symbols") {
  const DisplacedFamily cs = DisplacedFamily::coherent(space64());
  const Matrix eye = Matrix::Identity(64, 64);
  const Complex z(1.1, -0.6);

  CHECK(std::abs(lower_symbol({eye, "I"}, cs, z) - Complex(1.0)) < 1e-12);

  // <z|N|z> = |z|^2
  const FockOperator n = number_operator(space64());
  CHECK(std::abs(lower_symbol(n, cs, z) - Complex(std::norm(z))) < 1e-8);

  // A_{|z|^2} at s = -1 equals N + 1, so its symbol is |z|^2 + 1
  const FockOperator a_j{(n.mat + eye).eval(), "A_J"};
  CHECK(std::abs(lower_symbol(a_j, cs, z) - Complex(std::norm(z) + 1.0)) < 1e-8);
}

TEST_CASE("berezin transform blurs symbols") {
  const DisplacedFamily cs = DisplacedFamily::coherent(space64());
  const GridWindow win{-2.0, 2.0, -2.0, 2.0, 9, 9};

  SUBCASE("constants are reproduced") {
    const SymbolField one =
        berezin_transform([](Complex) { return Complex(1.0); }, cs, cs, quad_ref(), win);
    for (int i = 0; i < 9; ++i)
      for (int k = 0; k < 9; ++k) CHECK(std::abs(one.values(i, k) - Complex(1.0)) < 1e-6);
  }

  SUBCASE("the oscillator energy gains the unit blur offset") {
    const SymbolField filtered = berezin_transform(
        [](Complex z) { return Complex(std::norm(z)); }, cs, cs, quad_ref(), win);
    for (int i = 0; i < 9; ++i)
      for (int k = 0; k < 9; ++k) {
        const Complex z = win.point(i, k);
        CHECK(std::abs(filtered.values(i, k) - Complex(std::norm(z) + 1.0)) < 1e-5);
      }
  }

  SUBCASE("odd symbols pass through unchanged") {
    const SymbolField fq = berezin_transform(f_q, cs, cs, quad_ref(), win);
    for (int i = 0; i < 9; ++i)
      for (int k = 0; k < 9; ++k)
        CHECK(std::abs(fq.values(i, k) - f_q(win.point(i, k))) < 1e-6);
  }
}

TEST_CASE("two routes to the lower symbol agree") {
  const DisplacedFamily cs = DisplacedFamily::coherent(space64());
  const WHQuantizer quantizer(space64(), WeightFunction::cahill_glauber(Complex(-1.0, 0.0)),
                              quad_ref());
  const GridWindow win{-2.0, 2.0, -2.0, 2.0, 5, 5};
  const PhaseFunction fs[4] = {[](Complex) { return Complex(1.0); }, f_q, f_p,
                               [](Complex z) { return Complex(std::norm(z)); }};
  for (const auto& f : fs) {
    const FockOperator af = quantizer.quantize(f);
    const SymbolField via_kernel = berezin_transform(f, cs, cs, quad_ref(), win);
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < 5; ++k)
        CHECK(std::abs(lower_symbol(af, cs, win.point(i, k)) - via_kernel.values(i, k)) <
              1e-6);
  }
}

TEST_CASE("hermitian operators have real lower symbols") {
  const DisplacedFamily thermal = DisplacedFamily::cahill_glauber(space64(), -3.0);
  const auto [q, p] = quadrature_pair(space64());
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 10; ++t) {
    const Complex z(u(rng), u(rng));
    CHECK(std::abs(lower_symbol(q, thermal, z).imag()) < 1e-12);
    CHECK(std::abs(lower_symbol(p, thermal, z).imag()) < 1e-12);
  }
}

TEST_CASE("classical distance and the width-scaled kernel") {
  const GridWindow win{-2.0, 2.0, -2.0, 2.0, 9, 9};
  const PhaseFunction energy = [](Complex z) { return Complex(std::norm(z)); };
  const SymbolField f = sample_symbol(energy, win);

  CHECK(classical_distance(f, f, FieldNorm::sup) == 0.0);
  CHECK(classical_distance(f, f, FieldNorm::l2) == 0.0);

  // eps = 1 recovers the CS kernel: sup distance is the +1 blur offset
  const SymbolField blur1 = berezin_transform_gaussian(energy, 1.0, quad_ref(), win);
  CHECK(std::abs(classical_distance(f, blur1, FieldNorm::sup) - 1.0) < 1e-5);

  // the distance shrinks monotonically as the kernel narrows
  const SymbolField blur_half = berezin_transform_gaussian(energy, 0.5, quad_ref(), win);
  const SymbolField blur_quarter = berezin_transform_gaussian(energy, 0.25, quad_ref(), win);
  const double d1 = classical_distance(f, blur1, FieldNorm::sup);
  const double d2 = classical_distance(f, blur_half, FieldNorm::sup);
  const double d3 = classical_distance(f, blur_quarter, FieldNorm::sup);
  CHECK(d1 > d2);
  CHECK(d2 > d3);

  const GridWindow other{-2.0, 2.0, -2.0, 2.0, 7, 7};
  const SymbolField mismatched = sample_symbol(energy, other);
  CHECK_THROWS_AS(classical_distance(f, mismatched, FieldNorm::sup), GridMismatchError);
}

TEST_CASE("field export schema") {
  const GridWindow win{0.0, 1.0, 0.0, 1.0, 2, 2};
  const SymbolField f = sample_symbol([](Complex z) { return z; }, win);
  const std::string csv = field_to_csv(f);
  CHECK(csv.rfind("re_z,im_z,value_re,value_im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
