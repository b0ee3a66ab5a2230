#include "adiashort/shortcut.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "adiashort/series.hpp"

namespace adiashort {

CombSolution solve_comb(const RelaxationSpectrum& spec, double tau,
                        double cond_limit) {
  if (!spec.pure_cosine())
    throw UnsupportedSpectrum("solve_comb requires a pure cosine spectrum");
  if (!(tau > 0.0)) throw NonpositiveTau("tau must be positive");

  const auto& modes = spec.cosine_modes();
  const int K = static_cast<int>(modes.size());
  for (int k = 1; k < K; ++k)
    if (modes[k].angular_frequency == modes[k - 1].angular_frequency)
      throw SingularSystem("repeated spectral frequency");

  // G(w_k) = 0 for every mode reduces to the Vandermonde-type system in
  // x_k = w_k^2:  sum_m (-x_k)^m v_m = 1/x_k  (solved at tau = 1; the
  // comb scales exactly as 1/tau).
  Eigen::MatrixXd A(K, K);
  Eigen::VectorXd b(K);
  for (int k = 0; k < K; ++k) {
    const double x = modes[k].angular_frequency * modes[k].angular_frequency;
    double pw = 1.0;
    for (int m = 0; m < K; ++m) {
      A(k, m) = pw;
      pw *= -x;
    }
    b(k) = 1.0 / x;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU |
                                               Eigen::ComputeThinV);
  const double smin = svd.singularValues()(K - 1);
  const double smax = svd.singularValues()(0);
  if (smin <= 0.0) throw SingularSystem("comb system is singular");
  const double cond = smax / smin;
  if (cond > cond_limit)
    throw IllConditioned("comb system condition number " +
                         std::to_string(cond) + " exceeds limit");

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  Eigen::VectorXd v = lu.solve(b);
  v += lu.solve(b - A * v);  // one refinement step

  CombSolution sol;
  sol.condition_number = cond;
  for (int m = 0; m < K; ++m) {
    const double weight = v(m) / tau;
    sol.orders.push_back(2 * m);
    sol.weights.push_back(weight);
    // weight = 1/(tau Omega^{2(m+1)}) when positive
    if (weight > 0.0)
      sol.omega_n.push_back(
          std::pow(tau * weight, -1.0 / (2.0 * (m + 1))));
    else
      sol.omega_n.push_back(std::nullopt);
  }
  return sol;
}

Protocol build_shortcut(const RelaxationSpectrum& spec, double tau) {
  const CombSolution sol = solve_comb(spec, tau);
  std::vector<CombWeight> comb;
  comb.reserve(sol.orders.size());
  for (std::size_t i = 0; i < sol.orders.size(); ++i)
    comb.push_back({sol.orders[i], sol.weights[i] * tau});
  return build_universal(0.0, comb, tau);
}

std::vector<VerifyRow> verify_shortcut(const RelaxationSpectrum& spec,
                                       const std::vector<double>& tau_grid,
                                       const DriveParams& drive, double tol) {
  const double scale =
      drive.delta_lambda * drive.delta_lambda * spec.psi0();
  std::vector<VerifyRow> rows;
  rows.reserve(tau_grid.size());
  for (double tau : tau_grid) {
    const Protocol p = build_shortcut(spec, tau);
    const double w = excess_work_spectral(spec, p, drive).excess_work;
    rows.push_back({tau, w, std::abs(w) <= tol * scale});
  }
  return rows;
}

std::vector<std::pair<double, double>> asymptotic_decay_check(
    const RelaxationSpectrum& spec, const std::vector<double>& tau_sequence) {
  std::vector<std::pair<double, double>> out;
  out.reserve(tau_sequence.size());
  for (double tau : tau_sequence) {
    const CombSolution sol = solve_comb(spec, tau);
    double mx = 0.0;
    for (double w : sol.weights) mx = std::max(mx, std::abs(w));
    out.emplace_back(tau, mx);
  }
  return out;
}

}  // namespace adiashort
