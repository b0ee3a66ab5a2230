#ifndef ADIASHORT_TEST_UTIL_HPP
#define ADIASHORT_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "adiashort/protocol.hpp"
#include "adiashort/relaxation.hpp"

namespace adiashort::testing {

inline RelaxationSpectrum random_cosine_spectrum(std::mt19937& rng,
                                                 int max_modes,
                                                 double omega_lo = 0.5,
                                                 double omega_hi = 2.5) {
  std::uniform_int_distribution<int> nmodes(1, max_modes);
  std::uniform_real_distribution<double> amp(0.1, 1.0);
  std::uniform_real_distribution<double> freq(omega_lo, omega_hi);
  const int k = nmodes(rng);
  std::vector<CosineMode> modes;
  for (int i = 0; i < k; ++i) modes.push_back({amp(rng), freq(rng)});
  return RelaxationSpectrum(std::move(modes), {});
}

// Time-reversal symmetric protocol: symmetric boundary jumps, mirrored
// interior breakpoints, antisymmetric comb weights of even order.
inline Protocol random_symmetric_protocol(std::mt19937& rng, double tau,
                                          int max_terms = 3,
                                          int max_order = 4) {
  std::uniform_real_distribution<double> jump(0.0, 0.3);
  std::uniform_real_distribution<double> gval(-0.2, 1.2);
  std::uniform_real_distribution<double> tfrac(0.1, 0.4);
  std::uniform_real_distribution<double> wgt(-0.5, 0.5);
  std::uniform_int_distribution<int> nbp(0, 2);
  std::uniform_int_distribution<int> nterms(0, max_terms);

  const double j0 = jump(rng);
  std::vector<Breakpoint> bps{{0.0, j0}};
  const int interior = nbp(rng);
  std::vector<std::pair<double, double>> half;
  for (int i = 0; i < interior; ++i) {
    const double t = tfrac(rng) * tau;
    const double g = gval(rng);
    half.push_back({t, g});
  }
  std::sort(half.begin(), half.end());
  for (auto it = half.begin(); it != half.end(); ++it)
    if (it != half.begin() && it->first <= (it - 1)->first)
      it->first = (it - 1)->first + 1e-3 * tau;
  for (const auto& [t, g] : half) bps.push_back({t, g});
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    bps.push_back({tau - it->first, 1.0 - it->second});
  bps.push_back({tau, 1.0 - j0});

  std::vector<SingularTerm> singular;
  const int terms = nterms(rng);
  std::vector<int> orders;
  for (int n = 0; n <= max_order; n += 2) orders.push_back(n);
  std::shuffle(orders.begin(), orders.end(), rng);
  for (int i = 0; i < terms && i < static_cast<int>(orders.size()); ++i) {
    const double w = wgt(rng);
    singular.push_back({orders[i], w, -w});
  }
  return Protocol(tau, std::move(bps), std::move(singular));
}

}  // namespace adiashort::testing

#endif
