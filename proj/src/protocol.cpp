#include "adiashort/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace adiashort {

using cplx = std::complex<double>;

Protocol::Protocol(double tau, std::vector<Breakpoint> breakpoints,
                   std::vector<SingularTerm> singular)
    : tau_(tau), breakpoints_(std::move(breakpoints)),
      singular_(std::move(singular)) {
  if (!(tau_ > 0.0)) throw NonpositiveTau("tau must be positive");
  if (breakpoints_.size() < 2)
    throw InvalidProtocol("need breakpoints at t=0 and t=tau");
  if (breakpoints_.front().t != 0.0)
    throw InvalidProtocol("first breakpoint must be at t=0");
  if (std::abs(breakpoints_.back().t - tau_) > 1e-12 * tau_)
    throw InvalidProtocol("last breakpoint must be at t=tau");
  breakpoints_.back().t = tau_;
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i].t > breakpoints_[i - 1].t))
      throw InvalidProtocol("breakpoints must be strictly increasing in t");

  std::set<int> orders;
  for (const auto& s : singular_) {
    if (s.derivative_order < 0)
      throw InvalidProtocol("derivative order must be >= 0");
    if (!orders.insert(s.derivative_order).second)
      throw InvalidProtocol("singular derivative orders must be distinct");
  }
}

double Protocol::continuous_value(double t) const {
  if (t <= 0.0) return breakpoints_.front().g;
  if (t >= tau_) return breakpoints_.back().g;
  auto it = std::upper_bound(
      breakpoints_.begin(), breakpoints_.end(), t,
      [](double v, const Breakpoint& b) { return v < b.t; });
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  const double f = (t - lo.t) / (hi.t - lo.t);
  return lo.g + f * (hi.g - lo.g);
}

Protocol build_ramp(double tau) {
  if (!(tau > 0.0)) throw NonpositiveTau("tau must be positive");
  return Protocol(tau, {{0.0, 0.0}, {tau, 1.0}}, {});
}

Protocol build_quench(double tau) {
  if (!(tau > 0.0)) throw NonpositiveTau("tau must be positive");
  return Protocol(tau, {{0.0, 1.0}, {tau, 1.0}}, {});
}

Protocol build_universal(double waiting_time, const std::vector<CombWeight>& comb,
                         double tau) {
  if (!(tau > 0.0)) throw NonpositiveTau("tau must be positive");
  if (waiting_time < 0.0) throw InvalidProtocol("waiting time must be >= 0");
  const double denom = tau + 2.0 * waiting_time;
  std::vector<SingularTerm> singular;
  singular.reserve(comb.size());
  for (const auto& c : comb)
    singular.push_back({c.order, c.coefficient / denom, -c.coefficient / denom});
  return Protocol(tau,
                  {{0.0, waiting_time / denom}, {tau, (tau + waiting_time) / denom}},
                  std::move(singular));
}

bool is_time_reversal_symmetric(const Protocol& p, double tol) {
  const double tau = p.tau();
  for (const auto& b : p.breakpoints()) {
    if (std::abs(p.continuous_value(b.t) + p.continuous_value(tau - b.t) - 1.0) >
        tol)
      return false;
  }
  for (const auto& s : p.singular_terms())
    if (std::abs(s.weight_at_end + s.weight_at_start) > tol) return false;
  return true;
}

std::complex<double> fourier_of_gdot(const Protocol& p, double omega) {
  if (!(omega > 0.0)) throw InvalidProtocol("omega must be positive");
  const cplx iw(0.0, omega);
  const double tau = p.tau();
  const auto& bps = p.breakpoints();

  // boundary jumps relative to the ideal endpoints g(0)=0, g(tau)=1
  cplx G = p.start_jump() + p.end_jump() * std::exp(iw * tau);

  for (std::size_t i = 1; i < bps.size(); ++i) {
    const double slope =
        (bps[i].g - bps[i - 1].g) / (bps[i].t - bps[i - 1].t);
    if (slope != 0.0)
      G += slope * (std::exp(iw * bps[i].t) - std::exp(iw * bps[i - 1].t)) / iw;
  }

  for (const auto& s : p.singular_terms()) {
    // delta^(n)(t) in g differentiates once more inside dg
    const cplx miw_pow = std::pow(-iw, s.derivative_order + 1);
    const cplx iw_pow = std::pow(iw, s.derivative_order + 1);
    G += s.weight_at_start * miw_pow;
    G -= s.weight_at_end * iw_pow * std::exp(iw * tau);
  }
  return G;
}

}  // namespace adiashort
