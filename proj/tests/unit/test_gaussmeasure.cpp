#include <cmath>
#include <vector>

#include "brute.hpp"
#include "doctest.h"
#include "gibbsbo/errors.hpp"
#include "gibbsbo/gaussmeasure.hpp"
#include "gibbsbo/stats.hpp"

using namespace gibbsbo;
using gibbsbo::testing::brute_cubic;
using gibbsbo::testing::brute_synthesize;
using gibbsbo::testing::random_field;

namespace {

SpectralField two_cos_x_plus_two_cos_2x() { return SpectralField(std::vector<Complex>{1.0, 1.0}); }

}  // namespace

TEST_CASE("phi_N has expected L2 mass alpha_N") {
  const StreamFactory f(42);
  MomentAccumulator acc;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    auto s = f.stream(i);
    acc.add(kTwoPi * mode_mass(sample_phi(64, s).field));
  }
  CHECK(acc.estimate().within(alpha(64)));
}

TEST_CASE("real part of c_n has variance 1/(8 pi n)") {
  const StreamFactory f(7);
  std::vector<MomentAccumulator> acc(4);
  for (std::uint64_t i = 0; i < 50000; ++i) {
    auto s = f.stream(i);
    const auto u = sample_phi(4, s).field;
    for (int n = 1; n <= 4; ++n) acc[n - 1].add(std::pow(u.coeff(n).real(), 2));
  }
  for (int n = 1; n <= 4; ++n) CHECK(acc[n - 1].estimate().within(1.0 / (8.0 * kPi * n)));
}

TEST_CASE("sampled fields are real on the grid") {
  const StreamFactory f(3);
  auto s = f.stream(0);
  const auto u = sample_phi(16, s).field;
  double mag = 0.0, imag = 0.0;
  for (const auto& v : brute_synthesize(u, 40)) {
    mag = std::max(mag, std::abs(v));
    imag = std::max(imag, std::abs(v.imag()));
  }
  CHECK(imag <= 1e-12 * mag);
}

TEST_CASE("phi is built from the draw") {
  RandomStream s(1);
  const auto sample = sample_phi(5, s);
  for (int n = 1; n <= 5; ++n) {
    CHECK(std::abs(sample.field.coeff(n) - sample.draw.at(n) * testing::phi_scale(n)) < 1e-15);
    CHECK(sample.draw.at(-n) == std::conj(sample.draw.at(n)));
  }
}

TEST_CASE("alpha") {
  CHECK(alpha(1) == 1.0);
  CHECK(alpha(2) == 1.5);
  CHECK(alpha(4) == doctest::Approx(25.0 / 12.0));
  CHECK_THROWS_AS(alpha(0), PreconditionError);
}

TEST_CASE("f_N examples") {
  CHECK(std::abs(f_N(SpectralField(std::vector<Complex>{1.0}), 1)) < 1e-13);
  CHECK(f_N(two_cos_x_plus_two_cos_2x(), 2) == doctest::Approx(12.0 * kPi));
  CHECK(std::abs(f_N(two_cos_x_plus_two_cos_2x(), 1)) < 1e-13);
}

TEST_CASE("grid and triple-sum evaluations of f_N agree") {
  RandomStream s(2);
  for (int i = 0; i < 50; ++i) {
    const auto u = random_field(32, s);
    const double grid = f_N(u, 32);
    CHECK(grid == doctest::Approx(f_N_triple_sum(u, 32)).epsilon(1e-10));
    CHECK(grid == doctest::Approx(brute_cubic(u, 32)).epsilon(1e-10));
    CHECK(f_N(u, 20) == doctest::Approx(brute_cubic(u, 20)).epsilon(1e-10));
  }
}

TEST_CASE("g_N examples") {
  CHECK(g_N(SpectralField::zero(3), 3) == doctest::Approx(-alpha(3)));
  CHECK(g_N(SpectralField(std::vector<Complex>{1.0}), 1) == doctest::Approx(4.0 * kPi - 1.0));
  RandomStream s(3);
  const auto u = random_field(10, s);
  CHECK(g_N(project(u, 6), 6) == doctest::Approx(g_N(u, 6)));
}

TEST_CASE("trapezoid cutoff") {
  const CutoffSpec spec{};
  CHECK(cutoff(0.0, spec) == 1.0);
  CHECK(cutoff(-5.0, spec) == 1.0);
  CHECK(cutoff(10.0, spec) == 0.0);
  CHECK(cutoff(-12.0, spec) == 0.0);
  CHECK(cutoff(7.5, spec) == doctest::Approx(0.5));
  CHECK(cutoff(-7.5, spec) == doctest::Approx(0.5));
  const auto c = cutoff_with_radius(2.0);
  CHECK(c.taper == 2.0);
  CHECK_THROWS_AS((CutoffSpec{0.0, 1.0}.validate()), PreconditionError);
}

TEST_CASE("density_G examples") {
  const CutoffSpec spec{};
  const auto zero = density_G(SpectralField::zero(4), 4, spec);
  CHECK(zero.weight == doctest::Approx(cutoff(-alpha(4), spec)));
  CHECK(zero.log_weight == 0.0);

  // ||u||^2 = 8 pi, int u^3 = 12 pi
  const auto u = two_cos_x_plus_two_cos_2x();
  const auto wide = density_G(u, 2, cutoff_with_radius(30.0));
  CHECK(wide.g == doctest::Approx(8.0 * kPi - 1.5));
  CHECK(wide.f == doctest::Approx(12.0 * kPi));
  CHECK(wide.log_weight == doctest::Approx(-8.0 * kPi));
  CHECK(wide.weight == doctest::Approx(std::exp(-8.0 * kPi)));
  const auto narrow = density_G(u, 2, spec);
  CHECK(narrow.weight == 0.0);
  CHECK(narrow.log_weight == doctest::Approx(-8.0 * kPi));
  CHECK(gibbs_weight(wide.f, wide.g, cutoff_with_radius(30.0)) == doctest::Approx(wide.weight));
}

TEST_CASE("density_G ignores modes above N") {
  RandomStream s(4);
  const auto u = random_field(6, s, 0.1);
  const auto v = random_field(9, s, 0.1);
  std::vector<Complex> c(u.coeffs().begin(), u.coeffs().end());
  c.resize(9);
  for (int n = 7; n <= 9; ++n) c[n - 1] = v.coeff(n);
  const auto a = density_G(u, 6, {});
  const auto b = density_G(SpectralField(c), 6, {});
  CHECK(a.weight == doctest::Approx(b.weight).epsilon(1e-12));
}

TEST_CASE("resonant split at N = 1 is empty") {
  RandomStream s(5);
  const auto split = resonant_split(draw_gaussians(1, s), 1);
  CHECK(split.F1 == 0.0);
  CHECK(split.F2 == 0.0);
}

TEST_CASE("resonant split sums to the normalized triple sum") {
  RandomStream s(6);
  for (int trial = 0; trial < 10; ++trial) {
    const int N = 7;
    const auto draw = draw_gaussians(N, s);
    Complex sum{};
    for (int a = -N; a <= N; ++a) {
      for (int b = -N; b <= N; ++b) {
        const int c = -a - b;
        if (a == 0 || b == 0 || c == 0 || std::abs(c) > N) continue;
        sum += draw.at(a) * draw.at(b) * draw.at(c) / std::sqrt(std::abs(double(a) * b * c));
      }
    }
    const double expected = sum.real() / (8.0 * std::pow(kPi, 1.5));
    const auto split = resonant_split(draw, N);
    CHECK(split.F1 + split.F2 == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("f_N(phi_N) is 2 pi times the normalized triple sum") {
  RandomStream s(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto draw = draw_gaussians(8, s);
    const auto split = resonant_split(draw, 8);
    const double f = f_N(phi_from_draw(draw), 8);
    CHECK(f / (split.F1 + split.F2) == doctest::Approx(kTwoPi).epsilon(1e-10));
  }
}
