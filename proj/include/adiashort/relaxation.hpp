#ifndef ADIASHORT_RELAXATION_HPP
#define ADIASHORT_RELAXATION_HPP

#include <vector>

#include "adiashort/errors.hpp"

namespace adiashort {

// One oscillatory component of the relaxation function:
//   amplitude * cos(angular_frequency * t)
struct CosineMode {
  double amplitude = 0.0;
  double angular_frequency = 0.0;
};

// One decaying component, even extension in t:
//   amplitude * exp(-|t| / decay_time)
struct ExponentialMode {
  double amplitude = 0.0;
  double decay_time = 0.0;
};

// Relaxation function Psi(t) as a finite spectral sum of cosine and
// exponential modes. Immutable after construction. Construction
// canonicalizes: cosine modes sorted by ascending frequency, modes with
// coinciding frequency (relative tolerance 1e-12) merged by amplitude
// addition. Psi(0) = sum of all amplitudes must be positive.
class RelaxationSpectrum {
 public:
  RelaxationSpectrum(std::vector<CosineMode> cosine,
                     std::vector<ExponentialMode> exponential);

  const std::vector<CosineMode>& cosine_modes() const { return cosine_; }
  const std::vector<ExponentialMode>& exponential_modes() const {
    return exponential_;
  }

  bool pure_cosine() const { return exponential_.empty(); }
  bool pure_exponential() const { return cosine_.empty(); }

  // Psi(0), the total spectral weight.
  double psi0() const { return psi0_; }

  // Largest cosine angular frequency (0 if none).
  double max_frequency() const;

 private:
  std::vector<CosineMode> cosine_;
  std::vector<ExponentialMode> exponential_;
  double psi0_ = 0.0;
};

// Transverse-field Ising chain at T=0, periodic boundary conditions.
struct IsingChainParams {
  double coupling_J = 1.0;
  double field_gamma0 = 0.0;
  int spin_count = 2;  // even, >= 2
  double hbar = 1.0;
};

// Pure-cosine spectrum with N/2 modes:
//   frequency  2*eps(n)/hbar
//   amplitude  (16/N) * J^2/eps(n)^3 * sin^2((2n-1)pi/N)
//   eps(n) = 2*sqrt(J^2 + G0^2 - 2*J*G0*cos((2n-1)pi/N))
// Throws DegenerateSpectrum if any eps(n) vanishes within tolerance.
RelaxationSpectrum make_ising_spectrum(const IsingChainParams& params);

double eval_psi(const RelaxationSpectrum& spec, double t);

// Exact term-by-term derivative of given order >= 1. Exponential modes
// have a kink at t = 0; that point is rejected with KinkAtZero.
double eval_psi_derivative(const RelaxationSpectrum& spec, double t,
                           int order);

// One-sided Laplace transform of Psi at s > 0:
//   sum_k c_k s/(s^2+w_k^2) + sum_j A_j tau_j/(1 + s tau_j)
double laplace_psi(const RelaxationSpectrum& spec, double s);

}  // namespace adiashort

#endif
