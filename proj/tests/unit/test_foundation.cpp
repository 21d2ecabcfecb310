#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "gibbsbo/fft.hpp"
#include "gibbsbo/parallel.hpp"
#include "gibbsbo/report.hpp"
#include "gibbsbo/rng.hpp"
#include "gibbsbo/stats.hpp"
#include "gibbsbo/summation.hpp"

using namespace gibbsbo;

TEST_CASE("compensated sum recovers increments lost by naive summation") {
  CompensatedSum s(1.0);
  double naive = 1.0;
  for (int i = 0; i < 1000000; ++i) {
    s.add(1e-16);
    naive += 1e-16;
  }
  CHECK(naive == 1.0);
  CHECK(s.value() == doctest::Approx(1.0 + 1e-10).epsilon(1e-15));
}

TEST_CASE("merging partial sums matches a single pass") {
  std::vector<double> xs;
  RandomStream r(7);
  for (int i = 0; i < 10000; ++i) xs.push_back(r.normal() * std::pow(10.0, r.below(12)));
  CompensatedSum whole, left, right;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    whole.add(xs[i]);
    (i < 3000 ? left : right).add(xs[i]);
  }
  left.merge(right);
  CHECK(left.value() == doctest::Approx(whole.value()).epsilon(1e-15));

  CompensatedComplexSum c;
  c += std::complex<double>(1.0, 2.0);
  c += std::complex<double>(-0.5, 1.0);
  CHECK(c.value() == std::complex<double>(0.5, 3.0));
}

TEST_CASE("stream derivation is deterministic and index-addressed") {
  const StreamFactory a(42), b(42), c(43);
  auto s1 = a.substream(3).stream(17);
  auto s2 = b.substream(3).stream(17);
  auto s3 = c.substream(3).stream(17);
  auto s4 = a.substream(4).stream(17);
  const auto x1 = s1.bits(), x2 = s2.bits(), x3 = s3.bits(), x4 = s4.bits();
  CHECK(x1 == x2);
  CHECK(x1 != x3);
  CHECK(x1 != x4);
  CHECK(a.seed() == 42);
}

TEST_CASE("normal and uniform draws have the right first two moments") {
  RandomStream r(11);
  MomentAccumulator n, u;
  for (int i = 0; i < 200000; ++i) {
    n.add(r.normal());
    u.add(r.uniform());
  }
  CHECK(n.estimate().within(0.0));
  CHECK(std::abs(n.variance() - 1.0) < 0.02);
  CHECK(u.estimate().within(0.5));
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}

TEST_CASE("parallel_chunks returns chunk results in order for any worker count") {
  auto run = [] {
    return parallel_chunks(10000, [](std::size_t b, std::size_t e) {
      double s = 0.0;
      for (std::size_t i = b; i < e; ++i) s += std::sqrt(static_cast<double>(i));
      return s;
    }, 100);
  };
  setenv("GIBBSBO_THREADS", "1", 1);
  const auto serial = run();
  setenv("GIBBSBO_THREADS", "4", 1);
  const auto threaded = run();
  unsetenv("GIBBSBO_THREADS");
  REQUIRE(serial.size() == 100);
  CHECK(serial == threaded);

  const auto squares = parallel_map(300, [](std::size_t i) { return i * i; });
  CHECK(squares[299] == 299u * 299u);
}

TEST_CASE("parallel_chunks propagates exceptions") {
  CHECK_THROWS_AS(parallel_chunks(1000, [](std::size_t b, std::size_t) -> int {
    if (b >= 500) throw std::runtime_error("boom");
    return 0;
  }, 10),
                  std::runtime_error);
}

TEST_CASE("weighted accumulator with a constant observable is exactly one") {
  WeightedAccumulator acc;
  RandomStream r(5);
  for (int i = 0; i < 1000; ++i) acc.add(std::exp(3.0 * r.normal()), 1.0);
  CHECK(acc.mean() == 1.0);
  CHECK(acc.effective_sample_size() <= 1000.0);
  CHECK(acc.effective_sample_size() >= 1.0);
}

TEST_CASE("weighted accumulator standard error matches jackknife on smooth data") {
  WeightedAccumulator acc;
  std::vector<double> w, h;
  RandomStream r(9);
  for (int i = 0; i < 20000; ++i) {
    w.push_back(std::exp(0.3 * r.normal()));
    h.push_back(r.normal() + 1.0);
    acc.add(w.back(), h.back());
  }
  const double jk = jackknife_ratio_se(w, h, 100);
  CHECK(acc.std_error() == doctest::Approx(jk).epsilon(0.2));
}

TEST_CASE("line fit recovers an exact line") {
  const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const auto f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.rss == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
}

TEST_CASE("agreement verdicts") {
  CHECK(agreement_verdict(1.0, 0.01, 1.02) == Verdict::pass);
  CHECK(agreement_verdict(1.0, 0.01, 1.05) == Verdict::fail);
  CHECK(agreement_verdict(1.0, 0.5, 1.0) == Verdict::inconclusive);
  CHECK(worst(Verdict::pass, Verdict::inconclusive) == Verdict::inconclusive);
  CHECK(worst(Verdict::fail, Verdict::inconclusive) == Verdict::fail);
}

TEST_CASE("report CSV has a header row") {
  ExperimentReport r;
  r.columns = {"a", "b"};
  r.add_row({"1", "2"});
  r.add_verdict("4", "check", Verdict::pass, "");
  CHECK(r.csv() == "a,b\n1,2\n");
  CHECK(r.all_pass());
  CHECK(r.criterion_verdict("4") == Verdict::pass);
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_list(std::vector<int>{1, 2}) == "1 2");
}

TEST_CASE("real transforms round trip") {
  const std::size_t M = 16;
  std::vector<double> v(M), back(M);
  RandomStream r(3);
  for (auto& x : v) x = r.normal();
  std::vector<std::complex<double>> half(M / 2 + 1);
  fft::grid_to_half_spectrum(v, half);
  fft::half_spectrum_to_grid(half, back);
  for (std::size_t j = 0; j < M; ++j) CHECK(back[j] / M == doctest::Approx(v[j]));
  CHECK(fft::good_size(17) == 32);
  CHECK(fft::good_size(16) == 16);
}
