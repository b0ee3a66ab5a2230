#include <array>
#include <cmath>
#include <functional>
#include <random>

#include <doctest.h>

#include "adiashort/shortcut.hpp"
#include "test_util.hpp"

using namespace adiashort;

namespace {

const DriveParams kDrive{0.1, 1.0};

// Minimal Nelder-Mead in 2D for the brute-force comb-weight oracle.
std::array<double, 2> nelder_mead_2d(
    const std::function<double(const std::array<double, 2>&)>& f,
    std::array<double, 2> x0, double step, int iters) {
  std::array<std::array<double, 2>, 3> simplex{
      x0, {x0[0] + step, x0[1]}, {x0[0], x0[1] + step}};
  auto value = [&](const std::array<double, 2>& x) { return f(x); };
  for (int it = 0; it < iters; ++it) {
    std::sort(simplex.begin(), simplex.end(),
              [&](const auto& a, const auto& b) { return value(a) < value(b); });
    const auto& best = simplex[0];
    const auto& worst = simplex[2];
    std::array<double, 2> centroid{(simplex[0][0] + simplex[1][0]) / 2,
                                   (simplex[0][1] + simplex[1][1]) / 2};
    std::array<double, 2> refl{2 * centroid[0] - worst[0],
                               2 * centroid[1] - worst[1]};
    if (value(refl) < value(best)) {
      std::array<double, 2> expd{3 * centroid[0] - 2 * worst[0],
                                 3 * centroid[1] - 2 * worst[1]};
      simplex[2] = value(expd) < value(refl) ? expd : refl;
    } else if (value(refl) < value(simplex[1])) {
      simplex[2] = refl;
    } else {
      std::array<double, 2> contr{(centroid[0] + worst[0]) / 2,
                                  (centroid[1] + worst[1]) / 2};
      if (value(contr) < value(worst)) {
        simplex[2] = contr;
      } else {
        for (int i = 1; i < 3; ++i) {
          simplex[i][0] = (simplex[i][0] + best[0]) / 2;
          simplex[i][1] = (simplex[i][1] + best[1]) / 2;
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [&](const auto& a, const auto& b) { return value(a) < value(b); });
  return simplex[0];
}

}  // namespace

TEST_CASE("single mode: closed-form comb weight") {
  for (double omega : {0.5, 1.0, 7.0}) {
    for (double tau : {0.01, 1.0, 100.0}) {
      const RelaxationSpectrum spec({{1.0, omega}}, {});
      const auto sol = solve_comb(spec, tau);
      REQUIRE(sol.weights.size() == 1);
      CHECK(sol.orders[0] == 0);
      CHECK(sol.weights[0] ==
            doctest::Approx(1.0 / (tau * omega * omega)).epsilon(1e-12));
      REQUIRE(sol.omega_n[0].has_value());
      CHECK(*sol.omega_n[0] == doctest::Approx(omega).epsilon(1e-12));
    }
  }
}

TEST_CASE("two modes: brute-force minimization finds the same weights") {
  const RelaxationSpectrum spec({{0.5, 1.0}, {0.5, 2.0}}, {});
  const double tau = 1.0;
  const auto sol = solve_comb(spec, tau);

  auto objective = [&](const std::array<double, 2>& w) {
    const Protocol p(tau, {{0.0, 0.0}, {tau, 1.0}},
                     {{0, w[0], -w[0]}, {2, w[1], -w[1]}});
    return excess_work_spectral(spec, p, kDrive).excess_work;
  };
  const auto best = nelder_mead_2d(objective, {0.5, 0.0}, 0.3, 300);
  CHECK(objective(best) < 1e-18);
  CHECK(best[0] == doctest::Approx(sol.weights[0]).epsilon(1e-4));
  CHECK(best[1] == doctest::Approx(sol.weights[1]).epsilon(1e-4));
}

TEST_CASE("ising N=10: zero excess work at every switching time") {
  const auto spec = make_ising_spectrum({1.0, 0.95, 10, 1.0});
  const auto sol = solve_comb(spec, 1.0);
  REQUIRE(sol.orders.size() == 5);
  CHECK(sol.orders == std::vector<int>{0, 2, 4, 6, 8});
  for (const auto& o : sol.omega_n) CHECK(o.has_value());

  for (double tau : {0.1, 1.0, 10.0}) {
    const auto p = build_shortcut(spec, tau);
    CHECK(is_time_reversal_symmetric(p, 1e-12));
    const double w = excess_work_spectral(spec, p, kDrive).excess_work;
    CHECK(std::abs(w) <= 1e-10 * kDrive.delta_lambda * kDrive.delta_lambda *
                             spec.psi0());
  }
}

TEST_CASE("zero-work certificate: transform vanishes at every mode") {
  std::mt19937 rng(41);
  for (int i = 0; i < 10; ++i) {
    const auto spec = testing::random_cosine_spectrum(rng, 5);
    const auto p = build_shortcut(spec, 0.5 + i);
    for (const auto& m : spec.cosine_modes())
      CHECK(std::abs(fourier_of_gdot(p, m.angular_frequency)) <=
            1e-12 * (1.0 + m.angular_frequency));
  }
}

TEST_CASE("verify_shortcut") {
  const RelaxationSpectrum spec({{1.0, 2.0}}, {});
  const auto rows = verify_shortcut(spec, {0.01, 1.0, 100.0}, kDrive, 1e-12);
  for (const auto& r : rows) CHECK(r.pass);
}

TEST_CASE("bare ramp passes only at frequency resonances") {
  const double omega = 2.0 * M_PI;
  const RelaxationSpectrum spec({{1.0, omega}}, {});
  const double tol = 1e-10 * kDrive.delta_lambda * kDrive.delta_lambda;
  // omega*tau = 2 pi m: zeros of sin^2(omega tau/2)
  CHECK(std::abs(excess_work_spectral(spec, build_ramp(1.0), kDrive).excess_work) < tol);
  CHECK(std::abs(excess_work_spectral(spec, build_ramp(3.0), kDrive).excess_work) < tol);
  CHECK(excess_work_spectral(spec, build_ramp(1.37), kDrive).excess_work > 1e3 * tol);
}

TEST_CASE("comb weights decay exactly as 1/tau") {
  SUBCASE("single mode") {
    const RelaxationSpectrum spec({{1.0, 2.0}}, {});
    for (const auto& [tau, w] : asymptotic_decay_check(spec, {0.5, 1.0, 10.0, 100.0}))
      CHECK(w * tau == doctest::Approx(0.25).epsilon(1e-14));
  }
  SUBCASE("ising N=10") {
    const auto spec = make_ising_spectrum({1.0, 0.95, 10, 1.0});
    const auto seq = asymptotic_decay_check(spec, {1.0, 100.0});
    CHECK(seq[0].second == doctest::Approx(100.0 * seq[1].second).epsilon(1e-10));
  }
  SUBCASE("two modes") {
    const RelaxationSpectrum spec({{0.5, 1.0}, {0.5, 2.0}}, {});
    const auto seq = asymptotic_decay_check(spec, {1.0, 10.0});
    CHECK(seq[0].second == doctest::Approx(10.0 * seq[1].second).epsilon(1e-12));
  }
}

TEST_CASE("global dominance over admissible competitors") {
  std::mt19937 rng(43);
  const auto spec = make_ising_spectrum({1.0, 0.95, 10, 1.0});
  const double tau = 2.0;
  const double w_star =
      excess_work_spectral(spec, build_shortcut(spec, tau), kDrive).excess_work;
  CHECK(w_star <= excess_work_spectral(spec, build_ramp(tau), kDrive).excess_work);
  CHECK(w_star <= excess_work_spectral(spec, build_quench(tau), kDrive).excess_work);
  for (int i = 0; i < 10; ++i) {
    const auto p = testing::random_symmetric_protocol(rng, tau);
    CHECK(w_star <= excess_work_spectral(spec, p, kDrive).excess_work);
  }
}

TEST_CASE("solver error paths") {
  const RelaxationSpectrum mixed({{0.5, 1.0}}, {{0.5, 1.0}});
  CHECK_THROWS_AS(solve_comb(mixed, 1.0), UnsupportedSpectrum);
  CHECK_THROWS_AS(solve_comb(RelaxationSpectrum({{1.0, 1.0}}, {}), 0.0),
                  NonpositiveTau);

  // clustered frequencies: Vandermonde-in-omega^2 condition number blows up
  std::vector<CosineMode> clustered;
  for (int k = 0; k < 10; ++k)
    clustered.push_back({0.1, 1.0 + 1e-4 * k});
  const RelaxationSpectrum bad(std::move(clustered), {});
  CHECK_THROWS_AS(solve_comb(bad, 1.0), IllConditioned);
}
