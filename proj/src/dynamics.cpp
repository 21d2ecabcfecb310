#include "gibbsbo/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "gibbsbo/errors.hpp"
#include "gibbsbo/fft.hpp"
#include "gibbsbo/summation.hpp"

namespace gibbsbo {

namespace {

using Coeffs = std::vector<Complex>;

// (u^2)_n for n = 1..N via direct convolution over the Hermitian extension.
void square_direct(const Coeffs& c, Coeffs& out, Coeffs& full) {
  const int N = static_cast<int>(c.size());
  full.assign(2 * static_cast<std::size_t>(N) + 1, Complex{});
  for (int n = 1; n <= N; ++n) {
    full[N + n] = c[n - 1];
    full[N - n] = std::conj(c[n - 1]);
  }
  out.resize(c.size());
  for (int n = 1; n <= N; ++n) {
    Complex acc{};
    // n1 ranges over [n - N, N] so that |n - n1| <= N; the zero slot is 0
    for (int n1 = n - N; n1 <= N; ++n1) acc += full[N + n1] * full[N + n - n1];
    out[n - 1] = acc;
  }
}

void square_padded(const Coeffs& c, int grid_factor, Coeffs& out) {
  const std::size_t N = c.size();
  const std::size_t grid = fft::good_size(static_cast<std::size_t>(grid_factor) * N + 1);
  std::vector<Complex> half(grid / 2 + 1);
  std::copy(c.begin(), c.end(), half.begin() + 1);
  std::vector<double> values(grid);
  fft::half_spectrum_to_grid(half, values);
  for (auto& v : values) v *= v;
  fft::grid_to_half_spectrum(values, half);
  const double scale = 1.0 / static_cast<double>(grid);
  out.resize(N);
  for (std::size_t n = 1; n <= N; ++n) out[n - 1] = half[n] * scale;
}

// Nonlinear part -i n (u^2)_n.
class Nonlinearity {
 public:
  explicit Nonlinearity(int grid_factor) : grid_factor_(grid_factor) {}

  void operator()(const Coeffs& c, Coeffs& out) {
    const int N = static_cast<int>(c.size());
    if (N <= kDirectConvolutionLimit) {
      square_direct(c, out, full_);
    } else {
      square_padded(c, grid_factor_, out);
    }
    for (int n = 1; n <= N; ++n) out[n - 1] *= Complex(0.0, -static_cast<double>(n));
  }

 private:
  int grid_factor_;
  Coeffs full_;
};

bool all_finite(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

// Drives the integrating-factor RK4 loop; calls record(step, time, coeffs)
// for every recorded state including the initial one.
template <class Record>
void integrate(const SpectralField& u0, double t_final, const IntegratorConfig& cfg,
               Record&& record) {
  cfg.validate();
  const double steps_real = std::abs(t_final) / cfg.dt;
  const auto steps = static_cast<std::size_t>(std::llround(steps_real));
  if (std::abs(static_cast<double>(steps) * cfg.dt - std::abs(t_final)) >
      1e-9 * std::max(1.0, std::abs(t_final))) {
    throw PreconditionError("t_final is not a whole number of steps dt");
  }
  const double h = t_final < 0 ? -cfg.dt : cfg.dt;
  const int N = u0.max_mode();

  Coeffs c(u0.coeffs().begin(), u0.coeffs().end());
  record(std::size_t{0}, 0.0, c);

  // Exact linear phase over half a step: exp(-i n^2 h / 2).
  Coeffs half_phase(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    const double theta = -static_cast<double>(n) * n * h * 0.5;
    half_phase[n - 1] = Complex(std::cos(theta), std::sin(theta));
  }

  Nonlinearity nonlinear(cfg.grid_factor);
  Coeffs k1(N), k2(N), k3(N), k4(N), tmp(N);
  for (std::size_t step = 1; step <= steps; ++step) {
    if (cfg.linear_only) {
      for (int i = 0; i < N; ++i) c[i] *= half_phase[i] * half_phase[i];
    } else {
      nonlinear(c, k1);
      for (int i = 0; i < N; ++i) tmp[i] = half_phase[i] * (c[i] + 0.5 * h * k1[i]);
      nonlinear(tmp, k2);
      for (int i = 0; i < N; ++i) tmp[i] = half_phase[i] * c[i] + 0.5 * h * k2[i];
      nonlinear(tmp, k3);
      for (int i = 0; i < N; ++i) {
        const Complex e2 = half_phase[i] * half_phase[i];
        tmp[i] = e2 * c[i] + h * half_phase[i] * k3[i];
      }
      nonlinear(tmp, k4);
      for (int i = 0; i < N; ++i) {
        const Complex e1 = half_phase[i];
        const Complex e2 = e1 * e1;
        c[i] = e2 * c[i] + (h / 6.0) * (e2 * k1[i] + 2.0 * e1 * (k2[i] + k3[i]) + k4[i]);
      }
      if (!all_finite(c)) throw NonFiniteStateError(step);
    }
    if (step % cfg.record_every == 0 || step == steps) {
      record(step, static_cast<double>(step) * h, c);
    }
  }
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw PreconditionError("dt must be positive");
  if (grid_factor < 3) throw PreconditionError("grid_factor must be at least 3");
  if (record_every == 0) throw PreconditionError("record_every must be positive");
}

std::vector<Complex> square_modes_direct(const SpectralField& u) {
  Coeffs c(u.coeffs().begin(), u.coeffs().end()), out, full;
  square_direct(c, out, full);
  return out;
}

std::vector<Complex> square_modes_padded(const SpectralField& u, int grid_factor) {
  if (grid_factor < 3) throw PreconditionError("grid_factor must be at least 3");
  Coeffs c(u.coeffs().begin(), u.coeffs().end()), out;
  square_padded(c, grid_factor, out);
  return out;
}

SpectralField rhs(const SpectralField& u) {
  Coeffs c(u.coeffs().begin(), u.coeffs().end()), out;
  Nonlinearity nonlinear(3);
  nonlinear(c, out);
  for (int n = 1; n <= u.max_mode(); ++n) {
    out[n - 1] += Complex(0.0, -static_cast<double>(n) * n) * c[n - 1];
  }
  return SpectralField(std::move(out));
}

double cubic_integral(const SpectralField& u) {
  const std::size_t grid = fft::good_size(3 * static_cast<std::size_t>(u.max_mode()) + 1);
  auto values = synthesize(u, grid);
  for (auto& v : values) v = v * v * v;
  return grid_integral(values);
}

double hamiltonian(const SpectralField& u) {
  CompensatedSum quad;
  const auto c = u.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    quad.add(static_cast<double>(i + 1) * std::norm(c[i]));
  }
  // 2 pi sum_{n != 0} |n| |c_n|^2
  const double q = 2.0 * kTwoPi * quad.value();
  return -0.5 * q - cubic_integral(u) / 3.0;
}

Trajectory evolve(const SpectralField& u0, double t_final, const IntegratorConfig& cfg) {
  Trajectory traj;
  integrate(u0, t_final, cfg, [&](std::size_t, double time, const Coeffs& c) {
    SpectralField state{Coeffs(c)};
    traj.times.push_back(time);
    traj.l2_series.push_back(mode_mass(state));
    traj.hamiltonian_series.push_back(hamiltonian(state));
    traj.states.push_back(std::move(state));
  });
  return traj;
}

SpectralField flow(const SpectralField& u0, double t_final, const IntegratorConfig& cfg) {
  IntegratorConfig quiet = cfg;
  quiet.record_every = static_cast<std::size_t>(-1);
  Coeffs last;
  integrate(u0, t_final, quiet, [&](std::size_t, double, const Coeffs& c) { last = c; });
  return SpectralField(std::move(last));
}

ConservationReport conservation_report(const Trajectory& traj) {
  if (traj.states.empty()) throw PreconditionError("empty trajectory");
  auto drift = [](const std::vector<double>& q) {
    const double ref = std::max(std::abs(q.front()), 1e-300);
    double worst = 0.0;
    for (double v : q) worst = std::max(worst, std::abs(v - q.front()) / ref);
    return worst;
  };
  return {drift(traj.l2_series), drift(traj.hamiltonian_series)};
}

DivergenceEstimate rhs_divergence(const SpectralField& u, double step) {
  if (!(step > 0.0)) throw PreconditionError("step must be positive");
  const int N = u.max_mode();
  std::vector<Complex> base(u.coeffs().begin(), u.coeffs().end());
  DivergenceEstimate out;
  CompensatedSum frob;
  // column j: perturb a_j (c_j += h/2) or b_j (c_j -= i h/2)
  for (int j = 0; j < 2 * N; ++j) {
    const Complex dc = j < N ? Complex(0.5 * step, 0.0) : Complex(0.0, -0.5 * step);
    const int mode = j % N;
    auto plus = base, minus = base;
    plus[mode] += dc;
    minus[mode] -= dc;
    const auto fp = rhs(SpectralField(std::move(plus)));
    const auto fm = rhs(SpectralField(std::move(minus)));
    for (int i = 0; i < 2 * N; ++i) {
      const int m = i % N + 1;
      const Complex d = (fp.coeff(m) - fm.coeff(m)) / (2.0 * step);
      const double entry = i < N ? 2.0 * d.real() : -2.0 * d.imag();
      frob.add(entry * entry);
      if (i == j) out.divergence += entry;
    }
  }
  out.jacobian_norm = std::sqrt(frob.value());
  return out;
}

}  // namespace gibbsbo
