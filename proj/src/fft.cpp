#include "gibbsbo/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gibbsbo::fft {

namespace {

enum class Kind { c2r, r2c, forward, backward };

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays is. Plans are created once per (kind, size) and never destroyed.
fftw_plan plan_for(Kind kind, std::size_t m) {
  static std::mutex mutex;
  static std::map<std::pair<Kind, std::size_t>, fftw_plan> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_pair(kind, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int n = static_cast<int>(m);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  fftw_plan plan = nullptr;
  switch (kind) {
    case Kind::c2r: {
      fftw_complex* in = fftw_alloc_complex(m / 2 + 1);
      double* out = fftw_alloc_real(m);
      plan = fftw_plan_dft_c2r_1d(n, in, out, flags);
      fftw_free(in);
      fftw_free(out);
      break;
    }
    case Kind::r2c: {
      double* in = fftw_alloc_real(m);
      fftw_complex* out = fftw_alloc_complex(m / 2 + 1);
      plan = fftw_plan_dft_r2c_1d(n, in, out, flags);
      fftw_free(in);
      fftw_free(out);
      break;
    }
    case Kind::forward:
    case Kind::backward: {
      fftw_complex* in = fftw_alloc_complex(m);
      fftw_complex* out = fftw_alloc_complex(m);
      plan = fftw_plan_dft_1d(n, in, out,
                              kind == Kind::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                              flags);
      fftw_free(in);
      fftw_free(out);
      break;
    }
  }
  if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
  cache.emplace(key, plan);
  return plan;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

std::size_t good_size(std::size_t minimum) {
  std::size_t m = 1;
  while (m < minimum) m <<= 1;
  return m;
}

void half_spectrum_to_grid(std::span<const Complex> half, std::span<double> values) {
  const std::size_t m = values.size();
  if (half.size() != m / 2 + 1) throw std::invalid_argument("half spectrum size mismatch");
  // c2r overwrites its input
  thread_local std::vector<Complex> scratch;
  scratch.assign(half.begin(), half.end());
  fftw_execute_dft_c2r(plan_for(Kind::c2r, m), as_fftw(scratch.data()), values.data());
}

void grid_to_half_spectrum(std::span<const double> values, std::span<Complex> half) {
  const std::size_t m = values.size();
  if (half.size() != m / 2 + 1) throw std::invalid_argument("half spectrum size mismatch");
  thread_local std::vector<double> scratch;
  scratch.assign(values.begin(), values.end());
  fftw_execute_dft_r2c(plan_for(Kind::r2c, m), scratch.data(), as_fftw(half.data()));
}

void forward(std::span<const Complex> in, std::span<Complex> out) {
  if (in.size() != out.size()) throw std::invalid_argument("fft size mismatch");
  thread_local std::vector<Complex> scratch;
  scratch.assign(in.begin(), in.end());
  fftw_execute_dft(plan_for(Kind::forward, in.size()), as_fftw(scratch.data()),
                   as_fftw(out.data()));
}

void backward(std::span<const Complex> in, std::span<Complex> out) {
  if (in.size() != out.size()) throw std::invalid_argument("fft size mismatch");
  thread_local std::vector<Complex> scratch;
  scratch.assign(in.begin(), in.end());
  fftw_execute_dft(plan_for(Kind::backward, in.size()), as_fftw(scratch.data()),
                   as_fftw(out.data()));
}

}  // namespace gibbsbo::fft
