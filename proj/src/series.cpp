#include "adiashort/series.hpp"

#include <cmath>

namespace adiashort {

std::vector<double> SeriesCoefficients::comb_weights() const {
  std::vector<double> w(a_regular.size());
  for (std::size_t i = 0; i < a_regular.size(); ++i) w[i] = -a_regular[i];
  return w;
}

namespace {

// Taylor coefficients h_0..h_M of H(s) := s L{Psi/Psi(0)}(s) - 1, so that
// s L{Psi''/Psi(0)}(s) = s^2 H(s). H(0) = -1 always.
std::vector<double> taylor_of_H(const RelaxationSpectrum& spec, int terms) {
  std::vector<double> h(terms, 0.0);
  const double psi0 = spec.psi0();
  if (spec.pure_cosine()) {
    // H(s) = -sum_k chat_k w_k^2/(s^2+w_k^2): even series
    for (const auto& m : spec.cosine_modes()) {
      const double chat = m.amplitude / psi0;
      const double inv_w2 = 1.0 / (m.angular_frequency * m.angular_frequency);
      double pow_term = 1.0;  // (-1/w^2)^(i/2)
      for (int i = 0; i < terms; i += 2) {
        h[i] -= chat * pow_term;
        pow_term *= -inv_w2;
      }
    }
  } else if (spec.pure_exponential()) {
    // s L{Psi/Psi(0)}(s) = sum_j chat_j s tau_j/(1+s tau_j)
    //                    = sum_j chat_j sum_{m>=1} (-1)^{m+1} (s tau_j)^m
    h[0] = -1.0;
    for (const auto& m : spec.exponential_modes()) {
      const double chat = m.amplitude / psi0;
      double pow_term = m.decay_time;  // tau^i, sign handled below
      for (int i = 1; i < terms; ++i) {
        h[i] += chat * (i % 2 == 1 ? pow_term : -pow_term);
        pow_term *= m.decay_time;
      }
    }
  } else {
    throw NotExpandable(
        "series expansion requires a pure cosine or pure exponential "
        "spectrum");
  }
  return h;
}

}  // namespace

SeriesCoefficients laurent_coefficients(const RelaxationSpectrum& spec,
                                        int order, int max_order) {
  if (order < 0) throw TruncationOverflow("truncation order must be >= 0");
  if (order > max_order)
    throw TruncationOverflow("truncation order " + std::to_string(order) +
                             " exceeds maximum " + std::to_string(max_order));

  const int terms = order + 3;  // b_0 .. b_{order+2}
  const std::vector<double> h = taylor_of_H(spec, terms);

  // Long division: b = 1/h with b_0 = 1/h_0 = -1.
  std::vector<double> b(terms, 0.0);
  b[0] = 1.0 / h[0];
  for (int m = 1; m < terms; ++m) {
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) acc += h[j] * b[m - j];
    b[m] = -acc / h[0];
  }

  SeriesCoefficients out;
  out.a_minus2 = b[0];
  out.a_minus1 = b[1];
  out.a_regular.assign(b.begin() + 2, b.end());
  out.truncation_order = order;
  out.normalized = true;
  return out;
}

int default_truncation_order(const RelaxationSpectrum& spec) {
  const int k = static_cast<int>(spec.cosine_modes().size());
  return k > 0 ? 2 * (k - 1) : 0;
}

double waiting_time(const RelaxationSpectrum& spec) {
  double tw = 0.0;
  for (const auto& m : spec.exponential_modes())
    tw += m.amplitude / spec.psi0() * m.decay_time;
  return tw;
}

bool is_shortcut_candidate(const SeriesCoefficients& coeffs, double tol) {
  return std::abs(coeffs.a_minus1) <= tol;
}

}  // namespace adiashort
