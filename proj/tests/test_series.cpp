#include <cmath>
#include <random>

#include <doctest.h>

#include "adiashort/series.hpp"
#include "test_util.hpp"

using namespace adiashort;

TEST_CASE("single cosine mode: closed-form coefficients") {
  for (double omega : {0.5, 2.0, 7.0}) {
    const RelaxationSpectrum spec({{0.7, omega}}, {});
    const auto c = laurent_coefficients(spec, 6);
    CHECK(c.a_minus2 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.a_minus1 == 0.0);
    // as expanded a_0 = -1/w^2; the protocol-side comb weight is +1/w^2
    CHECK(c.a_regular[0] ==
          doctest::Approx(-1.0 / (omega * omega)).epsilon(1e-14));
    CHECK(c.comb_weights()[0] ==
          doctest::Approx(1.0 / (omega * omega)).epsilon(1e-14));
    for (std::size_t i = 1; i < c.a_regular.size(); ++i)
      CHECK(std::abs(c.a_regular[i]) < 1e-15);
  }
}

TEST_CASE("two-mode spectrum matches symbolic long-division oracle") {
  // c1=c2=1/2, w1=1, w2=2; frozen from an independent CAS expansion of
  // 1/(s^2 L{Psi}(s) - s Psi(0)) / s:
  //   -1/s^2 - 5/8 + (9/64) s^2 - (45/512) s^4 + ...
  const RelaxationSpectrum spec({{0.5, 1.0}, {0.5, 2.0}}, {});
  const auto c = laurent_coefficients(spec, 4);
  CHECK(c.a_minus2 == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(c.a_minus1 == 0.0);
  CHECK(c.a_regular[0] == doctest::Approx(-5.0 / 8.0).epsilon(1e-14));
  CHECK(std::abs(c.a_regular[1]) < 1e-16);
  CHECK(c.a_regular[2] == doctest::Approx(9.0 / 64.0).epsilon(1e-14));
  CHECK(std::abs(c.a_regular[3]) < 1e-16);
  CHECK(c.a_regular[4] == doctest::Approx(-45.0 / 512.0).epsilon(1e-14));
}

TEST_CASE("ising N=10: coefficient pattern") {
  const auto spec = make_ising_spectrum({1.0, 0.95, 10, 1.0});
  const int order = default_truncation_order(spec);
  CHECK(order == 8);
  const auto c = laurent_coefficients(spec, order);
  CHECK(c.a_minus2 == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(c.a_minus1 == 0.0);
  double max_abs = 0.0;
  for (double a : c.a_regular) max_abs = std::max(max_abs, std::abs(a));
  for (int n = 0; n <= order; ++n) {
    if (n % 2 == 1)
      CHECK(std::abs(c.a_regular[n]) <= 1e-14 * max_abs);
    else
      CHECK(std::abs(c.a_regular[n]) > 0.0);
  }
}

TEST_CASE("parity: odd coefficients vanish for random cosine spectra") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = testing::random_cosine_spectrum(rng, 6);
    const auto c = laurent_coefficients(spec, 10);
    double max_abs = 1e-300;
    for (double a : c.a_regular) max_abs = std::max(max_abs, std::abs(a));
    for (std::size_t n = 1; n < c.a_regular.size(); n += 2)
      CHECK(std::abs(c.a_regular[n]) <= 1e-14 * max_abs);
  }
}

TEST_CASE("truncation stability") {
  std::mt19937 rng(13);
  const auto spec = testing::random_cosine_spectrum(rng, 4);
  const auto lo = laurent_coefficients(spec, 8);
  const auto hi = laurent_coefficients(spec, 18);
  for (std::size_t i = 0; i < lo.a_regular.size(); ++i)
    CHECK(lo.a_regular[i] ==
          doctest::Approx(hi.a_regular[i]).epsilon(1e-12));
}

TEST_CASE("waiting time") {
  const RelaxationSpectrum cosine({{0.6, 1.2}, {0.4, 3.0}}, {});
  CHECK(waiting_time(cosine) == 0.0);

  const RelaxationSpectrum exp1({}, {{1.0, 3.5}});
  CHECK(waiting_time(exp1) == doctest::Approx(3.5).epsilon(1e-15));

  const RelaxationSpectrum mixed({{0.5, 2.0}}, {{0.5, 2.0}});
  CHECK(waiting_time(mixed) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("consistency: -a_minus1 equals the waiting time") {
  const RelaxationSpectrum exp2({}, {{0.4, 1.5}, {0.6, 4.0}});
  const auto c = laurent_coefficients(exp2, 4);
  CHECK(-c.a_minus1 == doctest::Approx(waiting_time(exp2)).epsilon(1e-12));

  std::mt19937 rng(17);
  const auto cosine = testing::random_cosine_spectrum(rng, 3);
  CHECK(laurent_coefficients(cosine, 4).a_minus1 == 0.0);
}

TEST_CASE("shortcut verdict") {
  const RelaxationSpectrum cosine({{1.0, 2.0}}, {});
  CHECK(is_shortcut_candidate(laurent_coefficients(cosine, 2), 1e-12));

  const RelaxationSpectrum exp1({}, {{1.0, 3.5}});
  CHECK_FALSE(is_shortcut_candidate(laurent_coefficients(exp1, 2), 1e-12));

  SeriesCoefficients exact;
  exact.a_minus1 = 0.0;
  CHECK(is_shortcut_candidate(exact, 0.0));
}

TEST_CASE("expansion errors") {
  const RelaxationSpectrum cosine({{1.0, 2.0}}, {});
  CHECK_THROWS_AS(laurent_coefficients(cosine, 65), TruncationOverflow);

  const RelaxationSpectrum mixed({{0.5, 2.0}}, {{0.5, 2.0}});
  CHECK_THROWS_AS(laurent_coefficients(mixed, 4), NotExpandable);
}
