#ifndef ADIASHORT_SERIES_HPP
#define ADIASHORT_SERIES_HPP

#include <vector>

#include "adiashort/relaxation.hpp"

namespace adiashort {

// Laurent coefficients a_n (n >= -2) of 1/(s * L{Psi''}(s)) around s = 0,
// computed for the normalized relaxation function Psi/Psi(0). Stored
// exactly as expanded, so for a single cosine mode a_0 = -1/w^2; the
// drive-protocol builder consumes the negated regular coefficients (see
// comb_weights()).
struct SeriesCoefficients {
  double a_minus2 = 0.0;
  double a_minus1 = 0.0;
  std::vector<double> a_regular;  // a_0 .. a_M
  int truncation_order = 0;       // M
  bool normalized = true;

  // Comb coefficients in the convention the protocol builder expects:
  // the order-n endpoint term of the optimal protocol carries weight
  // comb_weights()[n] / (tau + 2 tau_w). Equal to -a_n as expanded
  // (single cosine mode: +1/w^2).
  std::vector<double> comb_weights() const;
};

// Expansion by power-series long division of the exactly known Taylor
// series of s*L{Psi''}(s) = s^2 * H(s), H(0) = -1. Restricted to pure
// cosine or pure exponential spectra; mixed spectra are rejected with
// NotExpandable. Throws TruncationOverflow if order > max_order.
SeriesCoefficients laurent_coefficients(const RelaxationSpectrum& spec,
                                        int order, int max_order = 64);

// Largest regular index the exact finite-mode comb needs: 2K-2 for K
// cosine modes (0 for pure exponential spectra).
int default_truncation_order(const RelaxationSpectrum& spec);

// tau_w = L{Psi/Psi(0)}(0): sum_j (A_j/Psi(0)) tau_j, exactly 0 for pure
// cosine spectra. Equals -a_minus1.
double waiting_time(const RelaxationSpectrum& spec);

// True iff |a_minus1| <= tol: the optimal protocol is then a shortcut to
// adiabaticity.
bool is_shortcut_candidate(const SeriesCoefficients& coeffs, double tol);

}  // namespace adiashort

#endif
