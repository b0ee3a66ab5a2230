#ifndef ADIASHORT_WORK_HPP
#define ADIASHORT_WORK_HPP

#include <vector>

#include "adiashort/protocol.hpp"
#include "adiashort/relaxation.hpp"

namespace adiashort {

struct DriveParams {
  double delta_lambda = 1.0;
  double lambda0 = 1.0;
};

// Heuristic validity flag for the weak-drive assumption.
inline bool weak_drive_warning(const DriveParams& d) {
  return d.lambda0 == 0.0 ||
         std::abs(d.delta_lambda / d.lambda0) > 0.2;
}

enum class WorkMethod { spectral, quadrature };

struct ModeContribution {
  double angular_frequency = 0.0;
  double contribution = 0.0;
};

struct WorkResult {
  double excess_work = 0.0;
  std::vector<ModeContribution> per_mode;  // cosine modes, spectrum order
  WorkMethod method = WorkMethod::spectral;
  bool weak_drive = false;  // weak-drive diagnostic tripped
};

// Exact frequency-domain excess work for pure cosine spectra:
//   W_ex = (dl^2/2) sum_k c_k |G(w_k)|^2
// with G from fourier_of_gdot. No discretization error.
WorkResult excess_work_spectral(const RelaxationSpectrum& spec,
                                const Protocol& p, const DriveParams& drive);

// Independent time-domain oracle: mollifies the protocol with a Gaussian
// of the given width (deltas -> Hermite-weighted Gaussian derivatives,
// jumps and slope changes -> erf ramps) and evaluates the symmetric
// double integral by composite trapezoid on a uniform grid covering
// [-pad, tau+pad]. grid_points counts the nodes of that extended grid.
// Throws GridTooCoarse if the spacing fails to resolve the fastest mode,
// UnresolvedComb if it fails to resolve the mollifier.
WorkResult excess_work_quadrature(const RelaxationSpectrum& spec,
                                  const Protocol& p, const DriveParams& drive,
                                  double mollifier_width, int grid_points);

// Richardson extrapolation of the quadrature oracle over widths
// {w, w/2, w/4}, grid spacing tied to the width so discretization and
// mollification errors share the even-power expansion being cancelled.
WorkResult excess_work_quadrature_extrapolated(const RelaxationSpectrum& spec,
                                               const Protocol& p,
                                               const DriveParams& drive,
                                               double base_width);

// LHS - RHS of the optimality condition
//   int_0^tau Psi''(t-t') g(t') dt' = Psi'(tau - t)
// at each sample time, by closed-form integration against the
// piecewise-linear part and distributional pairing against the comb.
// Pure cosine spectra only.
std::vector<double> euler_lagrange_residual(const RelaxationSpectrum& spec,
                                            const Protocol& p,
                                            const std::vector<double>& t_samples);

// Single-integral formula for the excess work of an optimal protocol:
//   W* = (dl^2/2) Psi(0) + (dl^2/2) int_0^tau Psi'(tau-t) g(t) dt.
// Agrees with excess_work_spectral only when p solves the optimality
// condition; no check is enforced.
double optimal_excess_work(const RelaxationSpectrum& spec, const Protocol& p,
                           const DriveParams& drive);

}  // namespace adiashort

#endif
