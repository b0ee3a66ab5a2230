#include "adiashort/relaxation.hpp"

#include <algorithm>
#include <cmath>

namespace adiashort {

namespace {

constexpr double kMergeRelTol = 1e-12;

void validate_modes(const std::vector<CosineMode>& cosine,
                    const std::vector<ExponentialMode>& exponential) {
  for (const auto& m : cosine) {
    if (!(m.amplitude >= 0.0) || !std::isfinite(m.amplitude))
      throw InvalidSpectrum("cosine amplitude must be finite and >= 0");
    if (!(m.angular_frequency > 0.0) || !std::isfinite(m.angular_frequency))
      throw InvalidSpectrum("cosine angular frequency must be finite and > 0");
  }
  for (const auto& m : exponential) {
    if (!(m.amplitude >= 0.0) || !std::isfinite(m.amplitude))
      throw InvalidSpectrum("exponential amplitude must be finite and >= 0");
    if (!(m.decay_time > 0.0) || !std::isfinite(m.decay_time))
      throw InvalidSpectrum("exponential decay time must be finite and > 0");
  }
}

}  // namespace

RelaxationSpectrum::RelaxationSpectrum(std::vector<CosineMode> cosine,
                                       std::vector<ExponentialMode> exponential)
    : cosine_(std::move(cosine)), exponential_(std::move(exponential)) {
  if (cosine_.empty() && exponential_.empty())
    throw InvalidSpectrum("spectrum needs at least one mode");
  validate_modes(cosine_, exponential_);

  std::sort(cosine_.begin(), cosine_.end(),
            [](const CosineMode& a, const CosineMode& b) {
              return a.angular_frequency < b.angular_frequency;
            });
  // Merge frequency duplicates; the comb solver needs distinct frequencies.
  std::vector<CosineMode> merged;
  for (const auto& m : cosine_) {
    if (!merged.empty() &&
        m.angular_frequency - merged.back().angular_frequency <=
            kMergeRelTol * m.angular_frequency) {
      merged.back().amplitude += m.amplitude;
    } else {
      merged.push_back(m);
    }
  }
  cosine_ = std::move(merged);

  psi0_ = 0.0;
  for (const auto& m : cosine_) psi0_ += m.amplitude;
  for (const auto& m : exponential_) psi0_ += m.amplitude;
  if (!(psi0_ > 0.0)) throw InvalidSpectrum("Psi(0) must be positive");
}

double RelaxationSpectrum::max_frequency() const {
  return cosine_.empty() ? 0.0 : cosine_.back().angular_frequency;
}

RelaxationSpectrum make_ising_spectrum(const IsingChainParams& params) {
  if (params.spin_count < 2 || params.spin_count % 2 != 0)
    throw InvalidSpectrum("spin count N must be even and >= 2");
  if (!(params.coupling_J > 0.0))
    throw InvalidSpectrum("coupling J must be positive");
  if (!(params.field_gamma0 >= 0.0))
    throw InvalidSpectrum("field Gamma0 must be >= 0");
  if (!(params.hbar > 0.0)) throw InvalidSpectrum("hbar must be positive");

  const double J = params.coupling_J;
  const double G0 = params.field_gamma0;
  const int N = params.spin_count;
  const double eps_floor = 1e-12 * (J + G0);

  std::vector<CosineMode> modes;
  modes.reserve(N / 2);
  for (int n = 1; n <= N / 2; ++n) {
    const double theta = (2.0 * n - 1.0) * M_PI / N;
    const double eps =
        2.0 * std::sqrt(J * J + G0 * G0 - 2.0 * J * G0 * std::cos(theta));
    if (eps <= eps_floor)
      throw DegenerateSpectrum("eps(n) vanishes at n=" + std::to_string(n));
    const double sn = std::sin(theta);
    modes.push_back({16.0 / N * J * J / (eps * eps * eps) * sn * sn,
                     2.0 * eps / params.hbar});
  }
  return RelaxationSpectrum(std::move(modes), {});
}

double eval_psi(const RelaxationSpectrum& spec, double t) {
  double sum = 0.0;
  for (const auto& m : spec.cosine_modes())
    sum += m.amplitude * std::cos(m.angular_frequency * t);
  for (const auto& m : spec.exponential_modes())
    sum += m.amplitude * std::exp(-std::abs(t) / m.decay_time);
  return sum;
}

double eval_psi_derivative(const RelaxationSpectrum& spec, double t,
                           int order) {
  if (order < 1) throw InvalidSpectrum("derivative order must be >= 1");
  if (!spec.exponential_modes().empty() && t == 0.0)
    throw KinkAtZero("exponential modes are not differentiable at t=0");

  double sum = 0.0;
  for (const auto& m : spec.cosine_modes()) {
    // d^n/dt^n cos(wt) = w^n cos(wt + n pi/2)
    const double w = m.angular_frequency;
    sum += m.amplitude * std::pow(w, order) *
           std::cos(w * t + 0.5 * M_PI * order);
  }
  for (const auto& m : spec.exponential_modes()) {
    const double r = (t > 0.0 ? -1.0 : 1.0) / m.decay_time;
    sum += m.amplitude * std::pow(r, order) *
           std::exp(-std::abs(t) / m.decay_time);
  }
  return sum;
}

double laplace_psi(const RelaxationSpectrum& spec, double s) {
  if (!(s > 0.0)) throw InvalidSpectrum("Laplace variable s must be > 0");
  double sum = 0.0;
  for (const auto& m : spec.cosine_modes()) {
    const double w = m.angular_frequency;
    sum += m.amplitude * s / (s * s + w * w);
  }
  for (const auto& m : spec.exponential_modes())
    sum += m.amplitude * m.decay_time / (1.0 + s * m.decay_time);
  return sum;
}

}  // namespace adiashort
