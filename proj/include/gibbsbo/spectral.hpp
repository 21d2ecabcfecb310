#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gibbsbo {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Regularity exponent s of the Sobolev space H^s.
struct SobolevIndex {
  double s;

  explicit constexpr SobolevIndex(double value) : s(value) {
    if (!(value == value) || value > 1e300 || value < -1e300) {
      throw std::invalid_argument("Sobolev index must be finite");
    }
  }
};

/// Real, mean-zero distribution on the circle truncated to modes |n| <= N.
///
/// Only c_1..c_N are stored. c_{-n} = conj(c_n) and c_0 = 0 are implied, so
/// the field is real-valued and mean-zero by construction.
class SpectralField {
 public:
  /// Field with the given c_1..c_N. Throws std::invalid_argument if empty.
  explicit SpectralField(std::vector<Complex> coeffs);

  static SpectralField zero(int max_mode);

  /// From the cosine/sine basis: u = sum a_n cos(nx) + b_n sin(nx).
  static SpectralField from_cos_sin(std::span<const double> a, std::span<const double> b);

  int max_mode() const { return static_cast<int>(coeffs_.size()); }

  /// c_n for any integer n (zero outside 0 < |n| <= N).
  Complex coeff(int n) const {
    if (n == 0 || n > max_mode() || -n > max_mode()) return {};
    return n > 0 ? coeffs_[n - 1] : std::conj(coeffs_[-n - 1]);
  }

  /// c_1..c_N.
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// Cosine coefficient a_n = 2 Re c_n.
  double cos_coeff(int n) const { return 2.0 * coeff(n).real(); }
  /// Sine coefficient b_n = -2 Im c_n.
  double sin_coeff(int n) const { return -2.0 * coeff(n).imag(); }

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double scale);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double k, SpectralField a) { return a *= k; }

 private:
  std::vector<Complex> coeffs_;
};

SpectralField make_field(std::span<const Complex> coeffs);

/// Dirichlet projection S_N: zero every mode above N.
SpectralField project(const SpectralField& u, int N);

/// Multiplier -i sign(n).
SpectralField hilbert(const SpectralField& u);

/// Multiplier |n|^{1/2}.
SpectralField half_derivative(const SpectralField& u);

/// Multiplier i n.
SpectralField derivative(const SpectralField& u);

/// 2 pi sum_{n != 0} (1 + n^2)^s |c_n|^2.
double sobolev_norm_sq(const SpectralField& u, SobolevIndex s);

/// sum_{0 < |n| <= N} |c_n|^2 = ||u||_{L^2}^2 / (2 pi).
double mode_mass(const SpectralField& u);

/// u(x_j), x_j = 2 pi j / M. Requires M >= 2N + 1 (GridTooSmallError).
std::vector<double> synthesize(const SpectralField& u, std::size_t grid);

struct Analysis {
  SpectralField field;
  /// Mean of the grid data; not representable in a SpectralField.
  double mean;
};

/// Inverse of synthesize on modes 1..N. Requires values.size() >= 2N + 1.
/// A nonzero mean is discarded from the field and reported separately.
Analysis analyze(std::span<const double> values, int N);

/// Uniform rectangle rule (2 pi / M) sum_j f(x_j); exact for trigonometric
/// polynomials of degree < M.
double grid_integral(std::span<const double> values);

}  // namespace gibbsbo
