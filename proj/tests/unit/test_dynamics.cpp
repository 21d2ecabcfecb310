#include <cmath>
#include <vector>

#include "brute.hpp"
#include "doctest.h"
#include "gibbsbo/dynamics.hpp"
#include "gibbsbo/errors.hpp"

using namespace gibbsbo;
using gibbsbo::testing::brute_sigma;
using gibbsbo::testing::brute_square_mode;
using gibbsbo::testing::random_field;

namespace {

SpectralField unit_field(int N, RandomStream& r) {
  auto u = random_field(N, r);
  u *= 1.0 / std::sqrt(kTwoPi * mode_mass(u));
  return u;
}

double distance(const SpectralField& a, const SpectralField& b) {
  return std::sqrt(mode_mass(a - b) / mode_mass(b));
}

}  // namespace

TEST_CASE("rhs of the zero field is zero") {
  const auto r = rhs(SpectralField::zero(6));
  CHECK(mode_mass(r) == 0.0);
}

TEST_CASE("rhs for a single first mode") {
  const auto r = rhs(SpectralField(std::vector<Complex>{1.0, 0.0, 0.0}));
  CHECK(std::abs(r.coeff(1) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(r.coeff(2) - Complex(0.0, -2.0)) < 1e-15);
  CHECK(std::abs(r.coeff(3)) < 1e-15);
}

TEST_CASE("rhs matches its defining sum") {
  RandomStream s(1);
  const auto u = random_field(7, s);
  const auto r = rhs(u);
  for (int n = 1; n <= 7; ++n) {
    const Complex expected = Complex(0.0, -1.0) * double(n * n) * u.coeff(n) -
                             Complex(0.0, 1.0) * double(n) * brute_square_mode(u, n);
    CHECK(std::abs(r.coeff(n) - expected) < 1e-12);
  }
}

TEST_CASE("direct and padded convolutions agree") {
  RandomStream s(2);
  for (int i = 0; i < 50; ++i) {
    const auto u = random_field(32, s);
    const auto a = square_modes_direct(u);
    const auto b = square_modes_padded(u);
    double scale = 0.0, err = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
      scale = std::max(scale, std::abs(a[n]));
      err = std::max(err, std::abs(a[n] - b[n]));
      CHECK(std::abs(a[n] - brute_square_mode(u, static_cast<int>(n) + 1)) < 1e-12);
    }
    CHECK(err <= 1e-12 * std::max(1.0, scale));
  }
  CHECK_THROWS_AS(square_modes_padded(SpectralField::zero(4), 2), PreconditionError);
}

TEST_CASE("hamiltonian examples") {
  const auto one = SpectralField(std::vector<Complex>{1.0});
  CHECK(cubic_integral(one) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(hamiltonian(one) == doctest::Approx(-2.0 * kPi));

  const auto two = SpectralField(std::vector<Complex>{1.0, 1.0});
  CHECK(cubic_integral(two) == doctest::Approx(12.0 * kPi));
  CHECK(hamiltonian(two) == doctest::Approx(-10.0 * kPi));
  CHECK(hamiltonian(SpectralField::zero(3)) == 0.0);
}

TEST_CASE("cubic integral matches the triple sum") {
  RandomStream s(3);
  for (int i = 0; i < 20; ++i) {
    const auto u = random_field(20, s);
    CHECK(cubic_integral(u) == doctest::Approx(testing::brute_cubic(u, 20)).epsilon(1e-11));
  }
}

TEST_CASE("evolving zero stays zero") {
  IntegratorConfig cfg;
  cfg.dt = 0.01;
  const auto traj = evolve(SpectralField::zero(5), 0.1, cfg);
  for (const auto& st : traj.states) CHECK(mode_mass(st) == 0.0);
  const auto rep = conservation_report(traj);
  CHECK(rep.l2_drift == 0.0);
  CHECK(rep.hamiltonian_drift == 0.0);
}

TEST_CASE("linear flow is the exact phase rotation") {
  RandomStream s(4);
  const auto u0 = random_field(12, s);
  IntegratorConfig cfg;
  cfg.dt = 0.01;
  cfg.linear_only = true;
  const double t = 0.37;
  const auto u = flow(u0, t, cfg);
  for (int n = 1; n <= 12; ++n) {
    const Complex expected = std::polar(1.0, t * brute_sigma(n)) * u0.coeff(n);
    CHECK(std::abs(u.coeff(n) - expected) <= 1e-12);
  }
}

TEST_CASE("conservation at N = 16, t = 1, dt = 1e-3") {
  RandomStream s(5);
  const auto u0 = unit_field(16, s);
  const auto rep = conservation_report(evolve(u0, 1.0, {}));
  CHECK(rep.l2_drift <= 1e-8);
  CHECK(rep.hamiltonian_drift <= 1e-8);
}

TEST_CASE("state error is fourth order under step halving") {
  RandomStream s(6);
  const auto u0 = unit_field(16, s);
  IntegratorConfig fine;
  fine.dt = 1e-3 / 16.0;
  const auto ref = flow(u0, 1.0, fine);
  IntegratorConfig a, b;
  a.dt = 1e-3;
  b.dt = 5e-4;
  const double ratio = distance(flow(u0, 1.0, a), ref) / distance(flow(u0, 1.0, b), ref);
  CHECK(ratio >= 12.0);
  CHECK(ratio <= 20.0);
}

TEST_CASE("backward flow undoes forward flow") {
  RandomStream s(7);
  const auto u0 = unit_field(8, s);
  IntegratorConfig cfg;
  cfg.dt = 1e-3;
  const auto back = flow(flow(u0, 0.5, cfg), -0.5, cfg);
  CHECK(distance(back, u0) < 1e-8);
}

TEST_CASE("single-state trajectory has no drift") {
  Trajectory t;
  RandomStream s(8);
  const auto u = random_field(4, s);
  t.times = {0.0};
  t.states = {u};
  t.l2_series = {mode_mass(u)};
  t.hamiltonian_series = {hamiltonian(u)};
  const auto rep = conservation_report(t);
  CHECK(rep.l2_drift == 0.0);
  CHECK(rep.hamiltonian_drift == 0.0);
}

TEST_CASE("evolve preconditions") {
  IntegratorConfig cfg;
  cfg.dt = 0.1;
  CHECK_THROWS_AS(evolve(SpectralField::zero(2), 0.25, cfg), PreconditionError);
  cfg.dt = -1.0;
  CHECK_THROWS_AS(cfg.validate(), PreconditionError);
  cfg.dt = 0.1;
  cfg.grid_factor = 2;
  CHECK_THROWS_AS(cfg.validate(), PreconditionError);
}

TEST_CASE("blow-up is reported as a non-finite state") {
  IntegratorConfig cfg;
  cfg.dt = 0.5;
  auto u = SpectralField(std::vector<Complex>{1e3, 1e3, 1e3, 1e3});
  CHECK_THROWS_AS(evolve(u, 200.0, cfg), NonFiniteStateError);
}

TEST_CASE("rhs field is divergence free") {
  RandomStream s(9);
  for (int N : {1, 2, 4, 8}) {
    const auto est = rhs_divergence(random_field(N, s));
    CHECK(est.jacobian_norm > 0.0);
    CHECK(std::abs(est.divergence) <= 1e-6 * est.jacobian_norm);
  }
}
