#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sqrtnot/constants.hpp"
#include "sqrtnot/transport.hpp"

using namespace sqrtnot;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752;

// Reference values at kappa = 0.5, evaluated independently from the
// closed-form magnitudes at extended precision.
constexpr double kPA05 = 0.028295279007481523;   // r1^2
constexpr double kPB05 = 0.056590558014963046;   // r2^2
constexpr double kPC05 = 0.22376764832765461;    // t2^2
constexpr double kPD05 = 0.69134651464990082;    // t1^2
constexpr double kSdd05 = 0.21338651133133529;   // t1^2 (1 - t1^2)
constexpr double kScd05 = 0.15470098376272872;   // (t1 t2)^2

}  // namespace

TEST_CASE("output state is the input column of the matrix") {
  SUBCASE("resonant gate splits lead A into C and D") {
    const QubitState out = output_state(build_sqrt_not(0.0), Lead::A);
    CHECK(std::abs(out.amplitudes[0]) < 1e-15);
    CHECK(std::abs(out.amplitudes[1]) < 1e-15);
    CHECK(std::abs(out.amplitudes[2].real() - kInvSqrt2) < 1e-12);
    CHECK(std::abs(out.amplitudes[3].real() - kInvSqrt2) < 1e-12);
  }
  SUBCASE("identity passes lead B through") {
    const QubitState out = output_state(ScatteringMatrix::identity(), Lead::B);
    CHECK(out.amplitudes[0] == Complex(0.0));
    CHECK(out.amplitudes[1] == Complex(1.0));
    CHECK(out.amplitudes[2] == Complex(0.0));
    CHECK(out.amplitudes[3] == Complex(0.0));
  }
  SUBCASE("kappa=0.5 squared magnitudes") {
    const QubitState out = output_state(build_sqrt_not(0.5), Lead::A);
    CHECK(std::abs(std::norm(out.amplitudes[0]) - kPA05) < 1e-12);
    CHECK(std::abs(std::norm(out.amplitudes[1]) - kPB05) < 1e-12);
    CHECK(std::abs(std::norm(out.amplitudes[2]) - kPC05) < 1e-12);
    CHECK(std::abs(std::norm(out.amplitudes[3]) - kPD05) < 1e-12);
  }
}

TEST_CASE("output probabilities") {
  SUBCASE("perfect gate point") {
    const auto p = output_probabilities(build_sqrt_not(0.0), Lead::A);
    CHECK(std::abs(p[0]) < 1e-12);
    CHECK(std::abs(p[1]) < 1e-12);
    CHECK(std::abs(p[2] - 0.5) < 1e-12);
    CHECK(std::abs(p[3] - 0.5) < 1e-12);
  }
  SUBCASE("unit total for every kappa and input lead") {
    for (Lead input : all_leads) {
      for (int i = 0; i < 2001; ++i) {
        const double kappa = (-10.0 * (2000 - i) + 10.0 * i) / 2000.0;
        const auto p = output_probabilities(build_sqrt_not(kappa), input);
        CAPTURE(kappa);
        REQUIRE(std::abs(p[0] + p[1] + p[2] + p[3] - 1.0) < 1e-12);
      }
    }
  }
  SUBCASE("kappa=0.5 lead D") {
    const auto p = output_probabilities(build_sqrt_not(0.5), Lead::A);
    CHECK(std::abs(p[3] - kPD05) < 1e-12);
    CHECK(std::abs(p[3] - 0.6913) < 5e-5);
  }
}

TEST_CASE("fidelity against the perfect superposition") {
  const QubitState target = perfect_superposition_target();
  CHECK(std::abs(target.norm() - 1.0) < 1e-12);

  SUBCASE("resonant gate reaches unit fidelity") {
    const double f = fidelity(output_state(build_sqrt_not(0.0), Lead::A), target);
    CHECK(std::abs(f - 1.0) < 1e-12);
  }
  SUBCASE("target against itself") {
    CHECK(std::abs(fidelity(target, target) - 1.0) < 1e-12);
  }
  SUBCASE("asymptotic value at kappa=20") {
    const double f = fidelity(output_state(build_sqrt_not(20.0), Lead::A), target);
    const double closed_form =
        0.5 * std::pow(std::sqrt(3.0 / 16.0) + std::sqrt(1.0 / 16.0), 2.0);
    CHECK(std::abs(f - closed_form) < 1e-3);
    CHECK(std::abs(f - 0.23325317761392384) < 1e-9);
  }
  SUBCASE("unnormalized outputs are allowed and lower the fidelity") {
    const QubitState out = output_state(build_sqrt_not(2.0), Lead::A);
    CHECK(out.norm() < 1.0 + 1e-12);
    const double f = fidelity(out, target);
    CHECK(f > 0.0);
    CHECK(f < 1.0);
  }
  SUBCASE("non-unit target is rejected") {
    QubitState bad = target;
    bad.amplitudes[2] *= 0.9;
    CHECK_THROWS_AS(fidelity(target, bad), std::invalid_argument);
  }
}

TEST_CASE("noise prefactor") {
  using namespace constants;
  const double e3_over_h =
      elementary_charge * elementary_charge * elementary_charge / planck;

  SUBCASE("zero temperature gives e^3 V / h") {
    BiasConfig bias{1e-5, 0.0};
    CHECK(noise_prefactor(bias) == doctest::Approx(6.2069057638380905e-29).epsilon(1e-12));
    CHECK(noise_prefactor(bias) == doctest::Approx(e3_over_h * 1e-5).epsilon(1e-14));
  }
  SUBCASE("coth factor saturates at 1 deep in the shot regime") {
    // beta e V / 2 = 5803 here
    BiasConfig bias{1e-3, 1e-3};
    CHECK(std::abs(noise_prefactor(bias) / (e3_over_h * 1e-3) - 1.0) < 1e-12);
  }
  SUBCASE("thermal limit 2 e^2 kB T / h") {
    const double thermal = 2.0 * elementary_charge * elementary_charge * boltzmann / planck;
    CHECK(noise_prefactor({0.0, 1.0}) == doctest::Approx(thermal).epsilon(1e-14));
    CHECK(noise_prefactor({0.0, 1.0}) == doctest::Approx(1.0697395098744519e-27).epsilon(1e-12));
    // eV = kB T / 54000 at 1 nV and 1 K: indistinguishable from the V = 0 limit
    CHECK(std::abs(noise_prefactor({1e-9, 1.0}) / thermal - 1.0) < 1e-3);
  }
  SUBCASE("reference point V = 10 uV, T = 1 K") {
    const double x = elementary_charge * 1e-5 / (2.0 * boltzmann);
    CHECK(x == doctest::Approx(0.058022590607750413).epsilon(1e-14));
    CHECK(noise_prefactor({1e-5, 1.0}) ==
          doctest::Approx(1.0709397096994152e-27).epsilon(1e-12));
  }
  SUBCASE("prefactor grows with temperature at fixed bias") {
    double prev = noise_prefactor({1e-5, 0.0});
    for (double t : {0.05, 0.2, 1.0, 4.0, 20.0}) {
      const double cur = noise_prefactor({1e-5, t});
      CHECK(cur > prev);
      prev = cur;
    }
  }
  SUBCASE("error paths") {
    CHECK_THROWS_AS(noise_prefactor({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(noise_prefactor({-1e-5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(noise_prefactor({1e-5, -1.0}), std::invalid_argument);
  }
}

TEST_CASE("auto shot noise") {
  SUBCASE("resonant gate: T(1-T) at T = 1/2") {
    const auto res = shot_noise_auto(build_sqrt_not(0.0), Lead::D, Lead::A);
    CHECK(std::abs(res.prefactor_units - 0.25) < 1e-12);
    CHECK(res.kind == NoiseKind::Auto);
    CHECK(!res.si.has_value());
  }
  SUBCASE("vanishing transmission gives zero noise") {
    const auto res = shot_noise_auto(ScatteringMatrix::identity(), Lead::D, Lead::A);
    CHECK(res.prefactor_units == 0.0);
  }
  SUBCASE("kappa=0.5 value") {
    const auto res = shot_noise_auto(build_sqrt_not(0.5), Lead::D, Lead::A);
    CHECK(std::abs(res.prefactor_units - kSdd05) < 1e-12);
    CHECK(std::abs(res.prefactor_units - 0.6913 * 0.3087) < 5e-5);
  }
  SUBCASE("equals P_D (1 - P_D) across the grid") {
    for (int i = 0; i < 2001; ++i) {
      const double kappa = (-10.0 * (2000 - i) + 10.0 * i) / 2000.0;
      const ScatteringMatrix s = build_sqrt_not(kappa);
      const double p_d = output_probabilities(s, Lead::A)[index_of(Lead::D)];
      const double noise = shot_noise_auto(s, Lead::D, Lead::A).prefactor_units;
      CAPTURE(kappa);
      REQUIRE(noise >= 0.0);
      REQUIRE(std::abs(noise - p_d * (1.0 - p_d)) < 1e-12);
    }
  }
  SUBCASE("SI value is the prefactor multiple") {
    const BiasConfig bias{1e-5, 0.0};
    const auto res = shot_noise_auto(build_sqrt_not(0.0), Lead::D, Lead::A, bias);
    REQUIRE(res.si.has_value());
    CHECK(*res.si == doctest::Approx(0.25 * noise_prefactor(bias)).epsilon(1e-14));
  }
  SUBCASE("measurement lead must differ from the input") {
    CHECK_THROWS_AS(shot_noise_auto(build_sqrt_not(0.0), Lead::A, Lead::A),
                    std::invalid_argument);
  }
}

TEST_CASE("cross shot noise") {
  SUBCASE("resonant gate: the formula evaluates to +(t1 t2)^2 = 1/4") {
    const auto res = shot_noise_cross(build_sqrt_not(0.0), Lead::C, Lead::D, Lead::A);
    CHECK(std::abs(res.prefactor_units - 0.25) < 1e-12);
    CHECK(res.kind == NoiseKind::Cross);
  }
  SUBCASE("zero when one lead receives nothing from the input") {
    const auto res = shot_noise_cross(ScatteringMatrix::identity(), Lead::C, Lead::D, Lead::A);
    CHECK(res.prefactor_units == 0.0);
  }
  SUBCASE("kappa=0.5 value") {
    const auto res = shot_noise_cross(build_sqrt_not(0.5), Lead::C, Lead::D, Lead::A);
    CHECK(std::abs(res.prefactor_units - kScd05) < 1e-12);
    CHECK(std::abs(res.prefactor_units - 0.6913 * 0.2238) < 5e-4);
  }
  SUBCASE("symmetric under swapping the measured leads") {
    for (int i = 0; i < 401; ++i) {
      const double kappa = (-10.0 * (400 - i) + 10.0 * i) / 400.0;
      const ScatteringMatrix s = build_sqrt_not(kappa);
      const double cd = shot_noise_cross(s, Lead::C, Lead::D, Lead::A).prefactor_units;
      const double dc = shot_noise_cross(s, Lead::D, Lead::C, Lead::A).prefactor_units;
      CAPTURE(kappa);
      REQUIRE(std::abs(cd - dc) < 1e-12);
    }
  }
  SUBCASE("bounded by the geometric mean of the auto noises") {
    for (int i = 0; i < 401; ++i) {
      const double kappa = (-10.0 * (400 - i) + 10.0 * i) / 400.0;
      const ScatteringMatrix s = build_sqrt_not(kappa);
      const double cross =
          std::abs(shot_noise_cross(s, Lead::C, Lead::D, Lead::A).prefactor_units);
      const double auto_c = shot_noise_auto(s, Lead::C, Lead::A).prefactor_units;
      const double auto_d = shot_noise_auto(s, Lead::D, Lead::A).prefactor_units;
      CAPTURE(kappa);
      REQUIRE(cross <= std::sqrt(auto_c * auto_d) + 1e-12);
    }
  }
  SUBCASE("identical leads are rejected") {
    CHECK_THROWS_AS(shot_noise_cross(build_sqrt_not(0.0), Lead::C, Lead::C, Lead::A),
                    std::invalid_argument);
  }
}

TEST_CASE("generalized sums reproduce the three-term closed forms") {
  for (double kappa : {0.5, 1.3, -2.0}) {
    CAPTURE(kappa);
    const ScatteringMatrix s = build_sqrt_not(kappa);
    const Complex t_da = s(Lead::D, Lead::A), t_db = s(Lead::D, Lead::B);
    const Complex r_dc = s(Lead::D, Lead::C), r_dd = s(Lead::D, Lead::D);
    const Complex t_ca = s(Lead::C, Lead::A), t_cb = s(Lead::C, Lead::B);
    const Complex r_cc = s(Lead::C, Lead::C), r_cd = s(Lead::C, Lead::D);

    const double s_dd = std::norm(t_da) * std::norm(t_db) +
                        std::norm(t_da) * std::norm(r_dc) +
                        std::norm(t_da) * std::norm(r_dd);
    CHECK(std::abs(shot_noise_auto(s, Lead::D, Lead::A).prefactor_units - s_dd) < 1e-15);

    const Complex s_cd = std::conj(t_ca) * t_cb * std::conj(t_db) * t_da +
                         std::conj(t_ca) * r_cc * std::conj(r_dc) * t_da +
                         std::conj(t_ca) * r_cd * std::conj(r_dd) * t_da;
    CHECK(std::abs(shot_noise_cross(s, Lead::C, Lead::D, Lead::A).prefactor_units -
                   s_cd.real()) < 1e-15);
  }
}
