#include <cmath>
#include <vector>

#include "brute.hpp"
#include "doctest.h"
#include "gibbsbo/errors.hpp"
#include "gibbsbo/spectral.hpp"

using namespace gibbsbo;
using gibbsbo::testing::brute_synthesize;
using gibbsbo::testing::random_field;

namespace {

SpectralField cos_field(int n, double amp, int N) {
  std::vector<Complex> c(static_cast<std::size_t>(N));
  c[n - 1] = amp / 2.0;
  return SpectralField(std::move(c));
}

bool same(const SpectralField& a, const SpectralField& b, double tol = 1e-14) {
  const int N = std::max(a.max_mode(), b.max_mode());
  for (int n = 1; n <= N; ++n) {
    if (std::abs(a.coeff(n) - b.coeff(n)) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("make_field single modes") {
  const std::vector<Complex> zero(4);
  for (double v : synthesize(make_field(zero), 16)) CHECK(v == 0.0);

  const std::vector<Complex> c{Complex(0.5, 0.0)};
  const std::vector<Complex> s{Complex(0.0, -0.5)};
  const auto vc = synthesize(make_field(c), 11);
  const auto vs = synthesize(make_field(s), 11);
  for (std::size_t j = 0; j < 11; ++j) {
    const double x = kTwoPi * j / 11.0;
    CHECK(vc[j] == doctest::Approx(std::cos(x)).epsilon(1e-14));
    CHECK(vs[j] == doctest::Approx(std::sin(x)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(SpectralField(std::vector<Complex>{}), std::invalid_argument);
}

TEST_CASE("cosine and sine coefficients") {
  const std::vector<double> a{1.0, 0.0, 3.0}, b{0.0, 2.0, -1.0};
  const auto u = SpectralField::from_cos_sin(a, b);
  for (int n = 1; n <= 3; ++n) {
    CHECK(u.cos_coeff(n) == doctest::Approx(a[n - 1]));
    CHECK(u.sin_coeff(n) == doctest::Approx(b[n - 1]));
  }
  CHECK(u.coeff(0) == Complex{});
  CHECK(u.coeff(-2) == std::conj(u.coeff(2)));
  CHECK(u.coeff(7) == Complex{});
}

TEST_CASE("project") {
  const auto u = cos_field(1, 1.0, 3) + cos_field(3, 1.0, 3);
  CHECK(same(project(u, 2), cos_field(1, 1.0, 2)));
  CHECK(same(project(u, 5), u));

  RandomStream r(1);
  for (int i = 0; i < 100; ++i) {
    const auto v = random_field(12, r);
    const SobolevIndex s(r.normal());
    CHECK(sobolev_norm_sq(project(v, 1 + static_cast<int>(r.below(12))), s) <=
          sobolev_norm_sq(v, s));
  }
}

TEST_CASE("hilbert transform") {
  std::vector<Complex> two_sin{Complex(0.0, -1.0)};
  CHECK(same(hilbert(cos_field(1, 2.0, 1)), SpectralField(two_sin)));
  RandomStream r(2);
  const auto u = random_field(9, r);
  CHECK(same(hilbert(hilbert(u)), -1.0 * u));
  CHECK(same(hilbert(SpectralField::zero(3)), SpectralField::zero(3)));
}

TEST_CASE("half derivative") {
  CHECK(same(half_derivative(cos_field(1, 2.0, 1)), cos_field(1, 2.0, 1)));
  const auto u = cos_field(2, 2.0, 2);
  CHECK(same(half_derivative(half_derivative(u)), hilbert(derivative(u)), 1e-13));
  CHECK(same(half_derivative(SpectralField::zero(2)), SpectralField::zero(2)));
}

TEST_CASE("sobolev norms of cos x") {
  const auto u = cos_field(1, 1.0, 1);
  CHECK(sobolev_norm_sq(u, SobolevIndex(0.0)) == doctest::Approx(kPi));
  for (double s : {-1.0, -0.25, 0.5, 2.0}) {
    CHECK(sobolev_norm_sq(u, SobolevIndex(s)) == doctest::Approx(kPi * std::pow(2.0, s)));
  }
  CHECK(sobolev_norm_sq(SpectralField::zero(4), SobolevIndex(1.0)) == 0.0);
  CHECK_THROWS(SobolevIndex(std::nan("")));
}

TEST_CASE("synthesize cos x on 8 points") {
  const auto v = synthesize(cos_field(1, 1.0, 1), 8);
  for (int j = 0; j < 8; ++j) CHECK(v[j] == doctest::Approx(std::cos(kTwoPi * j / 8.0)));
  CHECK_THROWS_AS(synthesize(SpectralField::zero(4), 8), GridTooSmallError);
}

TEST_CASE("synthesis is real and matches the direct sum") {
  RandomStream r(4);
  for (int i = 0; i < 20; ++i) {
    const auto u = random_field(10, r);
    const auto fast = synthesize(u, 32);
    const auto slow = brute_synthesize(u, 32);
    double mag = 0.0, imag = 0.0;
    for (std::size_t j = 0; j < 32; ++j) {
      mag = std::max(mag, std::abs(slow[j]));
      imag = std::max(imag, std::abs(slow[j].imag()));
      CHECK(fast[j] == doctest::Approx(slow[j].real()).epsilon(1e-12));
    }
    CHECK(imag <= 1e-12 * mag);
  }
}

TEST_CASE("analyze inverts synthesize") {
  RandomStream r(5);
  for (int i = 0; i < 100; ++i) {
    const auto u = random_field(32, r);
    const auto a = analyze(synthesize(u, 128), 32);
    CHECK(same(a.field, u, 1e-12));
    CHECK(std::abs(a.mean) < 1e-12);
  }
}

TEST_CASE("analyze of a constant grid reports the mean") {
  const std::vector<double> v(16, 2.5);
  const auto a = analyze(v, 4);
  CHECK(a.mean == doctest::Approx(2.5));
  CHECK(mode_mass(a.field) < 1e-28);
  CHECK_THROWS_AS(analyze(v, 8), GridTooSmallError);
}

TEST_CASE("grid integral and L2 mass") {
  const auto u = cos_field(1, 2.0, 2) + cos_field(2, 2.0, 2);
  auto v = synthesize(u, 16);
  for (auto& x : v) x *= x;
  CHECK(grid_integral(v) == doctest::Approx(kTwoPi * mode_mass(u)));
  CHECK(kTwoPi * mode_mass(u) == doctest::Approx(8.0 * kPi));
}
