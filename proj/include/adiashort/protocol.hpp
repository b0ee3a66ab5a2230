#ifndef ADIASHORT_PROTOCOL_HPP
#define ADIASHORT_PROTOCOL_HPP

#include <complex>
#include <vector>

#include "adiashort/errors.hpp"

namespace adiashort {

// Endpoint singular term: weight_at_start * delta^(n)(t) plus
// weight_at_end * delta^(n)(tau - t). The deltas sit infinitesimally
// inside [0, tau]: full mass counts in integrals, zero pointwise value at
// the endpoints themselves.
struct SingularTerm {
  int derivative_order = 0;
  double weight_at_start = 0.0;
  double weight_at_end = 0.0;
};

struct Breakpoint {
  double t = 0.0;
  double g = 0.0;
};

// Normalized drive g(t) on [0, tau]: a continuous piecewise-linear part
// given by breakpoints (first at t=0, last at t=tau, strictly increasing)
// plus a singular comb with pairwise distinct derivative orders. The
// ideal boundary values are g(0)=0, g(tau)=1; deviations of the first and
// last breakpoint values from those encode finite boundary jumps, kept
// distinct from order-0 deltas (a jump and a delta have different
// transform algebra).
class Protocol {
 public:
  Protocol(double tau, std::vector<Breakpoint> breakpoints,
           std::vector<SingularTerm> singular);

  double tau() const { return tau_; }
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  const std::vector<SingularTerm>& singular_terms() const { return singular_; }

  // Piecewise-linear interpolation of the continuous part, t in [0, tau].
  double continuous_value(double t) const;

  double start_jump() const { return breakpoints_.front().g; }
  double end_jump() const { return 1.0 - breakpoints_.back().g; }

 private:
  double tau_;
  std::vector<Breakpoint> breakpoints_;
  std::vector<SingularTerm> singular_;
};

// Plain linear ramp t/tau, no singular part.
Protocol build_ramp(double tau);

// Instantaneous jump to 1 at t = 0+ (the maximal-excess-work reference).
Protocol build_quench(double tau);

struct CombWeight {
  int order = 0;
  double coefficient = 0.0;  // tau-independent; the builder divides by tau+2*tau_w
};

// Universal optimal protocol: continuous part (t + tau_w)/(tau + 2 tau_w)
// plus comb terms of weight +-coefficient/(tau + 2 tau_w). Coefficients
// are expected in the convention of SeriesCoefficients::comb_weights()
// (single cosine mode: order 0, coefficient 1/w^2).
Protocol build_universal(double waiting_time, const std::vector<CombWeight>& comb,
                         double tau);

// g(t) = 1 - g(tau - t) for the continuous part (checked at breakpoints
// and reflected breakpoints) and weight_at_end = -weight_at_start for
// every singular term, all within tol.
bool is_time_reversal_symmetric(const Protocol& p, double tol);

// G(w) = int_0^tau e^{iwt} dg(t), the transform of the distributional
// derivative of g. Segments of slope b on [t1,t2] contribute
// b (e^{iwt2}-e^{iwt1})/(iw); a jump D at t0 contributes D e^{iwt0};
// a term w_s delta^(n)(t) contributes w_s (-iw)^(n+1) and
// w_e delta^(n)(tau-t) contributes -w_e (iw)^(n+1) e^{iwtau}.
std::complex<double> fourier_of_gdot(const Protocol& p, double omega);

}  // namespace adiashort

#endif
