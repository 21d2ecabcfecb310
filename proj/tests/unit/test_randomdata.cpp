#include <cmath>
#include <vector>

#include "brute.hpp"
#include "doctest.h"
#include "gibbsbo/errors.hpp"
#include "gibbsbo/oracles.hpp"
#include "gibbsbo/randomdata.hpp"
#include "gibbsbo/stats.hpp"

using namespace gibbsbo;
using gibbsbo::testing::random_field;

TEST_CASE("dispersion relation") {
  static_assert(sigma(0) == 0);
  static_assert(sigma(3) == -9);
  static_assert(sigma(-2) == 4);
  CHECK(resonance_delta(1, 1) == 2);
}

TEST_CASE("resonance triples") {
  const auto a = make_resonance_triple(1, 1);
  CHECK(a.n == 2);
  CHECK(a.gap == 2);
  const auto b = make_resonance_triple(2, -1);
  CHECK(b.n == 1);
  CHECK(b.gap == 2);
  CHECK_THROWS_AS(make_resonance_triple(3, -3), PreconditionError);
  CHECK_THROWS_AS(make_resonance_triple(0, 2), PreconditionError);
}

TEST_CASE("gap is at least |n| on a window and in the full scan") {
  for (int n1 = -40; n1 <= 40; ++n1) {
    for (int n2 = -40; n2 <= 40; ++n2) {
      if (n1 == 0 || n2 == 0 || n1 + n2 == 0) continue;
      const auto t = make_resonance_triple(n1, n2);
      CHECK(t.gap >= std::abs(t.n));
    }
  }
  CHECK(resonance_gap_scan(256) == 1.0);
}

TEST_CASE("divided difference") {
  for (double d : {1.0, -3.0, 17.0, 1e-9}) {
    for (double t : {0.1, 0.7, 2.0}) {
      const Complex naive = (std::exp(Complex(0.0, t * d)) - 1.0) / d;
      const double tol = d == 1e-9 ? 1e-6 : 1e-13;
      CHECK(std::abs(divided_difference(t, d) - naive) <= tol * std::abs(naive));
      CHECK(divided_difference_magnitude(t, d) == doctest::Approx(std::abs(naive)).epsilon(tol));
    }
  }
  // small-d limit is i t
  CHECK(std::abs(divided_difference(0.5, 1e-12) - Complex(0.0, 0.5)) < 1e-12);
}

TEST_CASE("Pi of a square") {
  const SpectralField u(std::vector<Complex>{1.0});
  const auto p = pi_square(u, SobolevIndex(0.0));
  CHECK(std::abs(p.field.coeff(2) - Complex(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(p.field.coeff(1)) < 1e-14);
  CHECK(p.norm_sq == doctest::Approx(4.0 * kPi));
  CHECK(pi_square(SpectralField::zero(3), SobolevIndex(-0.6)).norm_sq == 0.0);
}

TEST_CASE("Pi of a square agrees with the direct convolution") {
  RandomStream r(1);
  const auto u = random_field(9, r);
  const auto p = pi_square(u, SobolevIndex(-0.6));
  for (int n = 1; n <= 18; ++n) {
    CHECK(std::abs(p.field.coeff(n) - testing::brute_square_mode(u, n)) < 1e-12);
  }
}

TEST_CASE("Pi-square Monte Carlo matches the oracle at N = 16") {
  const StreamFactory f(2);
  MomentAccumulator acc;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    auto s = f.stream(i);
    acc.add(pi_square(sample_phi(16, s).field, SobolevIndex(-0.6)).norm_sq);
  }
  CHECK(acc.estimate().within(exact_pi_square_expectation(16, -0.6)));
}

TEST_CASE("inverse derivative") {
  const SpectralField two_cos(std::vector<Complex>{1.0});
  const auto v = inv_derivative(two_cos);
  CHECK(v.sin_coeff(1) == doctest::Approx(2.0));
  CHECK(std::abs(v.cos_coeff(1)) < 1e-15);
  RandomStream r(3);
  for (int i = 0; i < 50; ++i) {
    const auto u = random_field(7, r);
    const auto back = derivative(inv_derivative(u));
    for (int n = 1; n <= 7; ++n) CHECK(std::abs(back.coeff(n) - u.coeff(n)) < 1e-14);
  }
  CHECK(mode_mass(inv_derivative(SpectralField::zero(2))) == 0.0);
}

TEST_CASE("gauge transform") {
  const auto z = gauge_transform(SpectralField::zero(4), 32);
  for (const auto& c : z.coeffs) CHECK(c == Complex{});
  CHECK_THROWS_AS(gauge_transform(SpectralField::zero(4), 31), GridTooSmallError);

  const StreamFactory f(4);
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto s = f.stream(i);
    const auto phi = sample_phi(16, s).field;
    const SobolevIndex half(-0.5);
    const double a = std::sqrt(gauge_transform(phi, 128).sobolev_norm_sq(half));
    const double b = std::sqrt(gauge_transform(phi, 256).sobolev_norm_sq(half));
    CHECK(std::abs(a - b) < 1e-8 * b);

    const auto small = 1e-4 * phi;
    const auto full = gauge_transform(small, 128);
    const auto lin = gauge_linearization(small);
    double err = 0.0, ref = 0.0;
    for (std::size_t n = 0; n < full.coeffs.size(); ++n) {
      const Complex l = n < lin.coeffs.size() ? lin.coeffs[n] : Complex{};
      err += std::norm(full.coeffs[n] - l);
      ref += std::norm(l);
    }
    CHECK(std::sqrt(err / ref) <= 1e-6);
  }
}

TEST_CASE("positive part keeps the n >= 1 coefficients") {
  RandomStream r(5);
  const auto u = random_field(4, r);
  const auto p = positive_part(u);
  REQUIRE(p.coeffs.size() == 4);
  for (int n = 1; n <= 4; ++n) CHECK(p.coeffs[n - 1] == u.coeff(n));
  CHECK(p.sobolev_norm_sq(SobolevIndex(0.0)) == doctest::Approx(kTwoPi * mode_mass(u) / 2.0));
}

TEST_CASE("second Picard iterate") {
  RandomStream r(6);
  const auto draw = draw_gaussians(8, r);
  CHECK(mode_mass(picard_second(draw, 8, 0.0)) == 0.0);
  CHECK(picard_second(draw, 8, 1.0).max_mode() == 16);
  CHECK_THROWS_AS(picard_second(draw, 9, 1.0), PreconditionError);

  const StreamFactory f(7);
  MomentAccumulator acc;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    auto s = f.stream(i);
    acc.add(sobolev_norm_sq(picard_second(draw_gaussians(16, s), 16, 1.0), SobolevIndex(-0.25)));
  }
  CHECK(acc.estimate().within(exact_picard_second_moment(16, 1.0, -0.25)));
}
