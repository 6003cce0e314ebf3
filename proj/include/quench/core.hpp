#ifndef QUENCH_CORE_HPP
#define QUENCH_CORE_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string_view>
#include <vector>

#include "quench/error.hpp"
#include "quench/parallel.hpp"

namespace quench {

using complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Natural units throughout: hbar = m = 1. The square-well convention also
// fixes the well half-width a = 1 (time unit t0 = m a^2 / hbar = 1); the
// oscillator convention fixes omega_i = 1 (length unit sqrt(hbar / m omega_i)).
enum class UnitConvention { NaturalSquareWell, NaturalOscillator };

struct UnitSystem {
  UnitConvention convention = UnitConvention::NaturalSquareWell;
  // Unit of length expressed in the common hbar = m = 1 frame.
  double length = 1.0;

  static UnitSystem square_well(double a = 1.0);
  static UnitSystem oscillator(double omega_i = 1.0);

  double time() const { return length * length; }
};

template <class Tag>
class UniformGrid {
 public:
  UniformGrid(double lo, double hi, std::size_t n) : lo_(lo), hi_(hi), n_(n) {
    if (n < 2) throw Error(ErrorCode::InvalidGrid, "grid needs at least 2 points");
    if (!(lo < hi)) throw Error(ErrorCode::InvalidGrid, "grid bounds must satisfy lo < hi");
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t size() const { return n_; }
  double step() const { return (hi_ - lo_) / static_cast<double>(n_ - 1); }
  double operator[](std::size_t i) const {
    return i + 1 == n_ ? hi_ : lo_ + static_cast<double>(i) * step();
  }
  bool symmetric() const { return lo_ == -hi_; }

  std::vector<double> points() const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)[i];
    return out;
  }

 private:
  double lo_;
  double hi_;
  std::size_t n_;
};

struct SpatialTag {};
struct MomentumTag {};
struct TimeTag {};

using SpatialGrid = UniformGrid<SpatialTag>;
using MomentumGrid = UniformGrid<MomentumTag>;
using TimeGrid = UniformGrid<TimeTag>;

struct Tolerances {
  double quad_abs = 1e-10;
  double quad_rel = 1e-8;
  // Hard truncation |k| <= k_cutoff (in 1/a) for the characteristic-function
  // and Wigner momentum integrals.
  double k_cutoff = 400.0;
  // Taylor-expansion window around removable singularities, relative to k0.
  double singularity_window = 1e-6;
  // Largest real-axis extent of the free-evolution momentum integral before
  // its tail is rotated into the complex plane.
  double contour_k_max = 1e5;

  void validate() const;
};

enum class DensityMethod { Analytic, MomentumIntegral, Propagator, WignerMarginal, Classical };

std::string_view to_string(DensityMethod method);

struct DensityProfile {
  SpatialGrid grid;
  std::vector<double> values;
  double time = 0.0;
  DensityMethod method = DensityMethod::Analytic;
};

/// Trapezoid integral of the sampled density over its grid.
double integrate_density(const DensityProfile& d);

/// Trapezoid integral of x^2 rho over the grid.
double second_moment(const DensityProfile& d);

/// Re-expresses a density given in `from` units in `to` units; the total
/// probability is unchanged.
DensityProfile convert_units(const DensityProfile& d, const UnitSystem& from, const UnitSystem& to);

using CharacteristicFunction = std::function<complex(double)>;

/// (1/2pi) * integral of exp(-ikx) chi(k) dk over |k| <= k_cutoff, complex
/// valued. The imaginary part is quadrature residue for Hermitian chi.
complex characteristic_integral(const CharacteristicFunction& chi, double x, const Tolerances& tol);

/// Density on `grid` from its characteristic function. Throws CutoffTooSmall
/// when |chi(+-k_cutoff)| > quad_rel.
DensityProfile characteristic_to_density(const CharacteristicFunction& chi, const SpatialGrid& grid,
                                         const Tolerances& tol = {}, Exec exec = Exec::Serial);

/// sin(u)/u with a Taylor branch for |u| < window.
double sinc(double u, double window = 1e-4);

}  // namespace quench

#endif  // QUENCH_CORE_HPP
