#include "adiashort/work.hpp"

#include <cmath>
#include <vector>

namespace adiashort {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

// Unit-mass Gaussian of width w and its derivatives via probabilists'
// Hermite polynomials: phi^(m)(x) = (-1)^m He_m(x/w) phi(x) / w^m.
double gaussian(double x, double w) {
  const double y = x / w;
  return kInvSqrt2Pi / w * std::exp(-0.5 * y * y);
}

double gaussian_derivative(double x, double w, int m) {
  const double y = x / w;
  double he_prev = 1.0, he = y;
  if (m == 0) return gaussian(x, w);
  for (int k = 1; k < m; ++k) {
    const double he_next = y * he - k * he_prev;
    he_prev = he;
    he = he_next;
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * he * gaussian(x, w) / std::pow(w, m);
}

double gaussian_cdf(double x, double w) {
  return 0.5 * (1.0 + std::erf(x / (w * std::sqrt(2.0))));
}

// Samples of the mollified distributional derivative of g on a uniform
// grid t_i = t_lo + i*dt.
std::vector<double> mollified_gdot(const Protocol& p, double width,
                                   double t_lo, double dt, int n) {
  const double tau = p.tau();
  const auto& bps = p.breakpoints();
  std::vector<double> gd(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double t = t_lo + i * dt;
    double v = 0.0;
    for (std::size_t s = 1; s < bps.size(); ++s) {
      const double slope = (bps[s].g - bps[s - 1].g) / (bps[s].t - bps[s - 1].t);
      if (slope != 0.0)
        v += slope * (gaussian_cdf(t - bps[s - 1].t, width) -
                      gaussian_cdf(t - bps[s].t, width));
    }
    if (p.start_jump() != 0.0) v += p.start_jump() * gaussian(t, width);
    if (p.end_jump() != 0.0) v += p.end_jump() * gaussian(t - tau, width);
    for (const auto& st : p.singular_terms()) {
      const int m = st.derivative_order + 1;
      if (st.weight_at_start != 0.0)
        v += st.weight_at_start * gaussian_derivative(t, width, m);
      if (st.weight_at_end != 0.0)
        v -= st.weight_at_end * gaussian_derivative(tau - t, width, m);
    }
    gd[i] = v;
  }
  return gd;
}

// d^m/dt^m of the pure-cosine relaxation function (m >= 0).
double cosine_psi_derivative(const RelaxationSpectrum& spec, double t, int m) {
  double sum = 0.0;
  for (const auto& mode : spec.cosine_modes()) {
    const double w = mode.angular_frequency;
    sum += mode.amplitude * std::pow(w, m) * std::cos(w * t + 0.5 * M_PI * m);
  }
  return sum;
}

void require_pure_cosine(const RelaxationSpectrum& spec, const char* op) {
  if (!spec.pure_cosine())
    throw UnsupportedSpectrum(std::string(op) +
                              " requires a pure cosine spectrum");
}

}  // namespace

WorkResult excess_work_spectral(const RelaxationSpectrum& spec,
                                const Protocol& p, const DriveParams& drive) {
  require_pure_cosine(spec, "excess_work_spectral");
  const double pref = 0.5 * drive.delta_lambda * drive.delta_lambda;
  WorkResult res;
  res.method = WorkMethod::spectral;
  res.weak_drive = weak_drive_warning(drive);
  for (const auto& m : spec.cosine_modes()) {
    const double c = pref * m.amplitude *
                     std::norm(fourier_of_gdot(p, m.angular_frequency));
    res.per_mode.push_back({m.angular_frequency, c});
    res.excess_work += c;
  }
  return res;
}

WorkResult excess_work_quadrature(const RelaxationSpectrum& spec,
                                  const Protocol& p, const DriveParams& drive,
                                  double mollifier_width, int grid_points) {
  if (!(mollifier_width > 0.0))
    throw UnresolvedComb("mollifier width must be positive");
  const double tau = p.tau();
  if (mollifier_width > 0.25 * tau)
    throw GridTooCoarse("mollifier width must be small against tau");

  const double pad = 12.0 * mollifier_width;
  const double t_lo = -pad;
  const double span = tau + 2.0 * pad;
  if (grid_points < 16) throw GridTooCoarse("too few grid points");
  const double dt = span / (grid_points - 1);

  const double wmax = spec.max_frequency();
  if (wmax > 0.0 && dt > 0.05 / wmax)
    throw GridTooCoarse("grid spacing does not resolve the fastest mode");
  if (dt > mollifier_width * (0.125 + 1e-12))
    throw UnresolvedComb("grid spacing does not resolve the mollifier");

  std::vector<double> u =
      mollified_gdot(p, mollifier_width, t_lo, dt, grid_points);
  for (auto& v : u) v *= dt;
  u.front() *= 0.5;  // trapezoid end weights (integrand ~0 there anyway)
  u.back() *= 0.5;

  const int n = grid_points;
  const double pref = 0.5 * drive.delta_lambda * drive.delta_lambda;
  WorkResult res;
  res.method = WorkMethod::quadrature;
  res.weak_drive = weak_drive_warning(drive);

  // For cosine modes the Toeplitz quadratic form factors exactly:
  // sum_ij u_i u_j cos(w (t_i - t_j)) = |sum_i u_i e^{i w t_i}|^2.
  // Accumulating the linear Fourier sum first has the square root of the
  // quadratic form's condition number, which matters for high-order comb
  // terms whose mollified samples scale like width^{-(n+1)}.
  for (const auto& m : spec.cosine_modes()) {
    long double re = 0.0L, im = 0.0L;
    for (int i = 0; i < n; ++i) {
      const double ph = m.angular_frequency * (i * dt);
      re += u[i] * std::cos(ph);
      im += u[i] * std::sin(ph);
    }
    const double acc = static_cast<double>(re * re + im * im);
    const double c = pref * m.amplitude * acc;
    res.per_mode.push_back({m.angular_frequency, c});
    res.excess_work += c;
  }

  if (!spec.exponential_modes().empty()) {
    // No such factorization for e^{-|t-t'|/tau_R}: fall back to lag sums.
    std::vector<double> lag(n, 0.0);
    for (int d = 0; d < n; ++d) {
      long double s = 0.0L;
      for (int i = 0; i + d < n; ++i) s += u[i] * u[i + d];
      lag[d] = static_cast<double>(s);
    }
    for (const auto& m : spec.exponential_modes()) {
      long double acc = lag[0];
      for (int d = 1; d < n; ++d)
        acc += 2.0L * std::exp(-d * dt / m.decay_time) * lag[d];
      res.excess_work += pref * m.amplitude * static_cast<double>(acc);
    }
  }
  return res;
}

WorkResult excess_work_quadrature_extrapolated(const RelaxationSpectrum& spec,
                                               const Protocol& p,
                                               const DriveParams& drive,
                                               double base_width) {
  const double tau = p.tau();
  const double wmax = spec.max_frequency();
  WorkResult runs[3];
  for (int k = 0; k < 3; ++k) {
    const double w = base_width / (1 << k);
    double dt = w / 8.0;
    if (wmax > 0.0) dt = std::min(dt, 0.04 / wmax);
    const double span = tau + 24.0 * w;
    const int n = static_cast<int>(std::ceil(span / dt)) + 1;
    runs[k] = excess_work_quadrature(spec, p, drive, w, n);
  }
  // Two Richardson stages assuming an even-power error expansion in the
  // width (grid spacing is tied to the width, so discretization error
  // shares it).
  auto rich = [](double f1, double f2) { return (4.0 * f2 - f1) / 3.0; };
  WorkResult res;
  res.method = WorkMethod::quadrature;
  res.weak_drive = runs[0].weak_drive;
  const double r1 = rich(runs[0].excess_work, runs[1].excess_work);
  const double r2 = rich(runs[1].excess_work, runs[2].excess_work);
  res.excess_work = (16.0 * r2 - r1) / 15.0;
  for (std::size_t i = 0; i < runs[0].per_mode.size(); ++i) {
    const double m1 =
        rich(runs[0].per_mode[i].contribution, runs[1].per_mode[i].contribution);
    const double m2 =
        rich(runs[1].per_mode[i].contribution, runs[2].per_mode[i].contribution);
    res.per_mode.push_back(
        {runs[0].per_mode[i].angular_frequency, (16.0 * m2 - m1) / 15.0});
  }
  return res;
}

std::vector<double> euler_lagrange_residual(const RelaxationSpectrum& spec,
                                            const Protocol& p,
                                            const std::vector<double>& t_samples) {
  require_pure_cosine(spec, "euler_lagrange_residual");
  const double tau = p.tau();
  const auto& bps = p.breakpoints();

  std::vector<double> residual;
  residual.reserve(t_samples.size());
  for (double t : t_samples) {
    double lhs = 0.0;
    // Continuous part against Psi''(t-t') = -sum c w^2 cos(w(t-t')):
    // closed-form segment integrals after u = t - t'.
    for (const auto& mode : spec.cosine_modes()) {
      const double w = mode.angular_frequency;
      double seg_sum = 0.0;
      for (std::size_t s = 1; s < bps.size(); ++s) {
        const double t1 = bps[s - 1].t, t2 = bps[s].t;
        const double slope = (bps[s].g - bps[s - 1].g) / (t2 - t1);
        const double alpha = bps[s - 1].g - slope * t1;
        const double ua = t - t2, ub = t - t1;
        const double sin_a = std::sin(w * ua), sin_b = std::sin(w * ub);
        const double cos_a = std::cos(w * ua), cos_b = std::cos(w * ub);
        const double i_cos = (sin_b - sin_a) / w;
        const double i_ucos = (ub * sin_b - ua * sin_a) / w +
                              (cos_b - cos_a) / (w * w);
        seg_sum += (alpha + slope * t) * i_cos - slope * i_ucos;
      }
      lhs -= mode.amplitude * w * w * seg_sum;
    }
    // Comb pairing: <delta^(n)(t'), Psi''(t-t')> = Psi^(n+2)(t),
    // <delta^(n)(tau-t'), Psi''(t-t')> = (-1)^n Psi^(n+2)(t-tau).
    for (const auto& st : p.singular_terms()) {
      const int n = st.derivative_order;
      const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
      if (st.weight_at_start != 0.0)
        lhs += st.weight_at_start * cosine_psi_derivative(spec, t, n + 2);
      if (st.weight_at_end != 0.0)
        lhs += st.weight_at_end * sgn * cosine_psi_derivative(spec, t - tau, n + 2);
    }
    const double rhs = cosine_psi_derivative(spec, tau - t, 1);
    residual.push_back(lhs - rhs);
  }
  return residual;
}

double optimal_excess_work(const RelaxationSpectrum& spec, const Protocol& p,
                           const DriveParams& drive) {
  require_pure_cosine(spec, "optimal_excess_work");
  const double tau = p.tau();
  const auto& bps = p.breakpoints();

  double integral = 0.0;
  // int_0^tau Psi'(tau-t) g_c(t) dt, per segment after u = tau - t.
  for (const auto& mode : spec.cosine_modes()) {
    const double w = mode.angular_frequency;
    double seg_sum = 0.0;
    for (std::size_t s = 1; s < bps.size(); ++s) {
      const double t1 = bps[s - 1].t, t2 = bps[s].t;
      const double slope = (bps[s].g - bps[s - 1].g) / (t2 - t1);
      const double alpha = bps[s - 1].g - slope * t1;
      const double ua = tau - t2, ub = tau - t1;
      const double sin_a = std::sin(w * ua), sin_b = std::sin(w * ub);
      const double cos_a = std::cos(w * ua), cos_b = std::cos(w * ub);
      const double i_sin = (cos_a - cos_b) / w;
      const double i_usin = (ua * cos_a - ub * cos_b) / w +
                            (sin_b - sin_a) / (w * w);
      seg_sum += (alpha + slope * tau) * i_sin - slope * i_usin;
    }
    integral -= mode.amplitude * w * seg_sum;
  }
  // Comb pairing against Psi'(tau-t).
  for (const auto& st : p.singular_terms()) {
    const int n = st.derivative_order;
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    if (st.weight_at_start != 0.0)
      integral += st.weight_at_start * cosine_psi_derivative(spec, tau, n + 1);
    if (st.weight_at_end != 0.0)
      integral += st.weight_at_end * sgn * cosine_psi_derivative(spec, 0.0, n + 1);
  }

  const double pref = 0.5 * drive.delta_lambda * drive.delta_lambda;
  return pref * spec.psi0() + pref * integral;
}

}  // namespace adiashort
