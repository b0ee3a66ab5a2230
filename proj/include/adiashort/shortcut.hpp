#ifndef ADIASHORT_SHORTCUT_HPP
#define ADIASHORT_SHORTCUT_HPP

#include <optional>
#include <vector>

#include "adiashort/protocol.hpp"
#include "adiashort/relaxation.hpp"
#include "adiashort/work.hpp"

namespace adiashort {

// Solved endpoint comb for a K-mode cosine spectrum: even orders
// 0, 2, ..., 2(K-1) with weights including the 1/tau factor. omega_n is
// the reporting form of term n (1-indexed): weight_n = 1/(tau Omega_n^{2n}),
// defined only when the weight is positive.
struct CombSolution {
  std::vector<int> orders;
  std::vector<double> weights;
  std::vector<std::optional<double>> omega_n;
  double condition_number = 0.0;
};

// Weights nullifying G(w_k) for every spectral frequency: the real
// Vandermonde-type system
//   sum_m (-w_k^2)^m v_m = 1/(tau w_k^2),  k = 1..K
// solved once at tau = 1 and rescaled by 1/tau. Throws SingularSystem for
// repeated frequencies and IllConditioned when the condition number
// exceeds cond_limit.
CombSolution solve_comb(const RelaxationSpectrum& spec, double tau,
                        double cond_limit = 1e12);

// Ramp t/tau plus the solved comb (waiting time is zero for cosine
// spectra), assembled through build_universal.
Protocol build_shortcut(const RelaxationSpectrum& spec, double tau);

struct VerifyRow {
  double tau = 0.0;
  double excess_work = 0.0;
  bool pass = false;
};

// Builds the shortcut at each tau and checks
// |W_ex| <= tol * dl^2 * Psi(0).
std::vector<VerifyRow> verify_shortcut(const RelaxationSpectrum& spec,
                                       const std::vector<double>& tau_grid,
                                       const DriveParams& drive, double tol);

// (tau, max |comb weight|) along an increasing tau sequence; decays as
// 1/tau exactly.
std::vector<std::pair<double, double>> asymptotic_decay_check(
    const RelaxationSpectrum& spec, const std::vector<double>& tau_sequence);

}  // namespace adiashort

#endif
