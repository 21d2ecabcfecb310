#include <cmath>
#include <vector>

#include "doctest.h"
#include "gibbsbo/chaos.hpp"
#include "gibbsbo/spectral.hpp"

using namespace gibbsbo;

namespace {

ChaosFunctionSpec product_example() { return {3, ChaosKind::product3, {{{1, 2, 3}, 1.0}}}; }
ChaosFunctionSpec square_example() { return {1, ChaosKind::square2, {{{1, 0, 0}, 1.0}}}; }

}  // namespace

TEST_CASE("Hermite values") {
  for (double x : {-2.0, 0.0, 0.3, 5.0}) CHECK(hermite(0, x) == 1.0);
  CHECK(hermite(1, 2.0) == doctest::Approx(-2.0));
  CHECK(hermite(2, 2.0) == doctest::Approx(3.0 / std::sqrt(2.0)));
  // h_3 = -(x^3 - 3x)/sqrt(6)
  CHECK(hermite(3, 1.5) == doctest::Approx(-(1.5 * 1.5 * 1.5 - 4.5) / std::sqrt(6.0)));
  CHECK_THROWS_AS(hermite(31, 1.0), DegreeTooLargeError);
}

TEST_CASE("Hermite functions are orthonormal under the Gaussian") {
  // Gauss-Hermite style check via a fine trapezoid on [-12, 12]
  const int M = 4000;
  const double h = 24.0 / M;
  for (int j = 0; j <= 6; ++j) {
    for (int k = 0; k <= 6; ++k) {
      double sum = 0.0;
      for (int i = 0; i <= M; ++i) {
        const double x = -12.0 + i * h;
        sum += hermite(j, x) * hermite(k, x) * std::exp(-0.5 * x * x);
      }
      sum *= h / std::sqrt(kTwoPi);
      CHECK(sum == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("exact chaos moments of the two examples") {
  CHECK(exact_chaos_moment(product_example(), 2) == doctest::Approx(1.0));
  CHECK(exact_chaos_moment(product_example(), 4) == doctest::Approx(27.0));
  CHECK(exact_chaos_moment(square_example(), 2) == doctest::Approx(2.0));
  CHECK(exact_chaos_moment(square_example(), 4) == doctest::Approx(60.0));
  CHECK_THROWS(exact_chaos_moment(square_example(), 3));
}

TEST_CASE("spec validation") {
  ChaosFunctionSpec bad{3, ChaosKind::product3, {{{1, 1, 2}, 1.0}}};
  CHECK_THROWS(bad.validate());
  ChaosFunctionSpec out{2, ChaosKind::square2, {{{3, 0, 0}, 1.0}}};
  CHECK_THROWS(out.validate());
  RandomStream r(1);
  const auto spec = random_chaos_spec(ChaosKind::mixed3, 10, 6, r);
  CHECK(spec.terms.size() == 6);
  CHECK_NOTHROW(spec.validate());
  CHECK(chaos_degree(ChaosKind::mixed3) == 3);
  CHECK(chaos_degree(ChaosKind::square2) == 2);
}

TEST_CASE("p = 2 ratio is exactly one") {
  RandomStream r(2);
  const auto spec = random_chaos_spec(ChaosKind::product3, 6, 4, r);
  const auto ratio = chaos_lp_ratio(spec, 2.0, 10000, StreamFactory(5));
  CHECK(ratio.ratio.value == 1.0);
  CHECK(ratio.bound == 1.0);
}

TEST_CASE("Monte Carlo ratios of the exact examples") {
  const auto a = chaos_lp_ratio(product_example(), 4.0, 400000, StreamFactory(1));
  CHECK(a.ratio.within(std::pow(27.0, 0.25)));
  CHECK(a.bound == doctest::Approx(std::pow(3.0, 1.5)));
  const auto b = chaos_lp_ratio(square_example(), 4.0, 400000, StreamFactory(2));
  CHECK(b.ratio.within(std::pow(60.0, 0.25) / std::sqrt(2.0)));
  CHECK(b.bound == doctest::Approx(3.0));
}

TEST_CASE("random specs satisfy the hypercontractive bound") {
  RandomStream r(3);
  const std::vector<double> ps{3.0, 4.0, 6.0};
  for (auto kind : {ChaosKind::product3, ChaosKind::mixed3, ChaosKind::square2}) {
    const auto spec = random_chaos_spec(kind, 8, 5, r);
    for (const auto& lp : chaos_lp_ratios(spec, ps, 100000, StreamFactory(9))) {
      CHECK(lp.ratio.value <= lp.bound + 3.0 * lp.ratio.std_error);
    }
    const auto four = chaos_lp_ratio(spec, 4.0, 100000, StreamFactory(10));
    CHECK(std::abs(four.moment_p - exact_chaos_moment(spec, 4)) <= 4.0 * four.moment_p_se);
  }
}

TEST_CASE("Gaussian tail bound examples") {
  const std::vector<double> one{1.0}, pair{3.0, 4.0};
  CHECK(gaussian_tail_bound(one, 1e-9) == doctest::Approx(2.0));
  CHECK(exact_gaussian_tail(one, 2.0) == doctest::Approx(0.0455002639).epsilon(1e-8));
  CHECK(gaussian_tail_bound(one, 2.0) == doctest::Approx(2.0 * std::exp(-2.0)));
  CHECK(exact_gaussian_tail(pair, 10.0) == doctest::Approx(exact_gaussian_tail(one, 2.0)));
  CHECK(exact_gaussian_tail(pair, 10.0) <= gaussian_tail_bound(pair, 10.0));
  const auto e = empirical_tail(pair, 10.0, 200000, StreamFactory(4));
  CHECK(e.within(exact_gaussian_tail(pair, 10.0)));
}

TEST_CASE("moment-to-tail constants") {
  const auto t1 = moment_to_tail({1.0, 0.0, 1.0, 1});
  CHECK(t1.ceiling == doctest::Approx(1.0 / (2.0 * std::exp(1.0))));
  CHECK(t1.delta == doctest::Approx(0.0919698603));
  CHECK(t1.C1 > 1.0);
  const auto t3 = moment_to_tail({1.0, 0.0, 1.0, 3});
  CHECK(t3.ceiling == doctest::Approx(3.0 / (2.0 * std::exp(1.0))));
  double prev = t3(0.5);
  for (double l = 1.0; l < 50.0; l += 1.0) {
    CHECK(t3(l) < prev);
    prev = t3(l);
  }
  CHECK(t3(8.0) == doctest::Approx(t3.C1 * std::exp(-t3.delta * std::pow(8.0, 2.0 / 3.0))));
}

TEST_CASE("moment-to-tail bound holds for a Gaussian") {
  // ||x||_p <= sqrt(p) for a standard Gaussian, so C = 1, k = 1
  const auto t = moment_to_tail({1.0, 0.0, 1.0, 1});
  for (double l : {0.5, 1.0, 2.0, 3.0}) {
    CHECK(std::erfc(l / std::sqrt(2.0)) <= t(l));
  }
}
