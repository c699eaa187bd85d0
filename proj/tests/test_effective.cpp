#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starkcav/effective.hpp"

#include <cmath>
#include <random>

using namespace starkcav;
using effective::StarkInput;

TEST_CASE("effective detuning, frequency form") {
    CHECK(effective::effective_detuning(0.7, StarkInput::frequency_form(0.0, 0.0, 100.0)) ==
          0.7);
    // delta=0, E=1, Omega=0, omega0=200 -> 2*200*1/200^2 = 0.01
    CHECK(effective::effective_detuning(0.0, StarkInput::frequency_form(1.0, 0.0, 200.0)) ==
          doctest::Approx(0.01).epsilon(1e-14));
    CHECK_THROWS_AS(StarkInput::frequency_form(1.0, 5.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(StarkInput::frequency_form(1.0, 7.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(StarkInput::frequency_form(-1.0, 0.0, 5.0), std::invalid_argument);
}

TEST_CASE("effective detuning, polarizability form") {
    const auto stark = StarkInput::polarizability_form(2.0, 3.0);
    CHECK(stark.shift() == 18.0);
    // field tunes the cavity into effective resonance
    CHECK(effective::effective_detuning(-18.0, stark) == 0.0);
    CHECK_THROWS_AS(StarkInput::polarizability_form(1e308, 1e308), std::invalid_argument);
}

TEST_CASE("the two stark input forms agree under the shift identification") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double omega0 = 50.0 + 500.0 * uni(rng);
        const double omega = 0.9 * omega0 * uni(rng);
        const double efield = 5.0 * uni(rng);
        const double delta = 4.0 * (uni(rng) - 0.5);
        const auto freq = StarkInput::frequency_form(efield, omega, omega0);
        const auto pol = StarkInput::polarizability_form(freq.shift(), 1.0);
        CHECK(effective::effective_detuning(delta, freq) ==
              effective::effective_detuning(delta, pol));
    }
}

TEST_CASE("bad-cavity rates") {
    // resonance: Gamma = g^2/kappa, shift = 0
    for (auto [g, kappa] : {std::pair{1.0, 1.0}, std::pair{0.7, 2.3}, std::pair{2.0, 5.0},
                            std::pair{1.0, 0.1}}) {
        const auto r = effective::rates(g, kappa, 0.0);
        CHECK(std::abs(r.gamma - g * g / kappa) <= 4e-16 * (g * g / kappa));
        CHECK(r.shift == 0.0);
    }
    // delta_e = kappa: Gamma = g^2/(2 kappa) = shift
    const auto r = effective::rates(1.0, 2.0, 2.0);
    CHECK(r.gamma == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(r.shift == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(effective::rates(1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(effective::rates(1.0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("gamma is even in delta_e and strictly decreasing in |delta_e|") {
    const double g = 1.3, kappa = 0.8;
    double prev = effective::rates(g, kappa, 0.0).gamma;
    CHECK(prev <= g * g / kappa);
    for (int i = 1; i <= 60; ++i) {
        const double de = 0.25 * i;
        const auto plus = effective::rates(g, kappa, de);
        const auto minus = effective::rates(g, kappa, -de);
        CHECK(plus.gamma == minus.gamma);
        CHECK(plus.gamma < prev);
        CHECK(plus.shift > 0.0);
        CHECK(minus.shift < 0.0);
        prev = plus.gamma;
    }
    // Kleppner inhibition limit
    CHECK(effective::rates(g, kappa, 1e9).gamma < 1e-15);
}

TEST_CASE("eta spot values and exchange antisymmetry") {
    CHECK(effective::eta(2.0, 1.5, 1.5) == 1.0);
    // Delta = 0, stark shift = kappa -> eta = 1/2 (significance threshold)
    CHECK(effective::eta(1.0, 0.0, 1.0) == 0.5);
    // cavity tuned above the atomic frequency, field restores resonance -> eta = 2
    CHECK(effective::eta(1.0, -1.0, 0.0) == 2.0);
    CHECK_THROWS_AS(effective::eta(0.0, 1.0, 1.0), std::invalid_argument);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(-10.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        const double kappa = 0.1 + std::abs(uni(rng));
        const double d1 = uni(rng), d2 = uni(rng);
        const double prod = effective::eta(kappa, d1, d2) * effective::eta(kappa, d2, d1);
        CHECK(prod == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("inhibition iff the effective detuning grows in magnitude") {
    // eta < 1 iff delta_e^2 > delta^2; with a positive shift s: iff delta > -s/2
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double kappa = 0.2 + 3.0 * uni(rng);
        const double s = 0.1 + 4.0 * uni(rng);
        const double delta = 12.0 * (uni(rng) - 0.5);
        if (std::abs(2.0 * delta + s) < 1e-9) continue;   // knife edge
        const double e = effective::eta(kappa, delta, delta + s);
        CHECK((e < 1.0) == (delta > -s / 2.0));
        CHECK((e > 1.0) == (delta < -s / 2.0));
        if (delta > 0.0) CHECK(e < 1.0);
    }
}

TEST_CASE("adiabatic population") {
    const effective::EffectiveRates r{0.5, 0.0};
    CHECK(effective::adiabatic_population(0.0, r) == 1.0);
    CHECK(effective::adiabatic_population(1.0, r) == doctest::Approx(std::exp(-1.0)));
    // Gamma = g^2/kappa at t = kappa/(2 g^2) gives exactly 1/e
    const auto res = effective::rates(1.0, 5.0, 0.0);
    CHECK(effective::adiabatic_population(5.0 / 2.0, res) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(effective::adiabatic_population(7.0, {0.0, 0.0}) == 1.0);
    CHECK_THROWS_AS(effective::adiabatic_population(-1.0, r), std::invalid_argument);
}

TEST_CASE("damped rabi population: limits") {
    // undamped Jaynes-Cummings: cos^2(gt)
    for (double t : {0.0, 0.3, 1.0, 2.2, 7.9}) {
        const double c = std::cos(1.7 * t);
        CHECK(effective::damped_rabi_population(1.7, 0.0, 0.0, t) ==
              doctest::Approx(c * c).epsilon(1e-12));
    }
    CHECK(effective::damped_rabi_population(1.0, 5.0, 3.0, 0.0) == 1.0);
    // critically damped branch (kappa = 2g, delta_e = 0): c_e = e^{-gt}(1+gt)
    const double g = 1.0, t = 1.3;
    const double expect = std::pow(std::exp(-g * t) * (1.0 + g * t), 2);
    CHECK(effective::damped_rabi_population(g, 2.0, 0.0, t) ==
          doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("damped rabi vs adiabatic law inside the validity band") {
    // relative error stays below 5*g^2/(kappa^2+delta_e^2) when
    // g^2 <= 0.04*(kappa^2+delta_e^2)
    for (auto [kappa, de] : {std::pair{5.0, 0.0}, std::pair{6.0, 3.0}, std::pair{0.0, 5.0},
                             std::pair{8.0, 8.0}}) {
        const double g = 1.0;
        const double band = kappa * kappa + de * de;
        REQUIRE(g * g <= 0.04 * band);
        if (kappa == 0.0) continue;   // rates needs a lossy cavity
        const auto r = effective::rates(g, kappa, de);
        const double bound = 5.0 * g * g / band;
        for (double t = 0.0; t <= 3.0 * kappa / (g * g); t += 0.05) {
            const double exact = effective::damped_rabi_population(g, kappa, de, t);
            const double adiab = effective::adiabatic_population(t, r);
            CHECK(std::abs(exact - adiab) <= bound * adiab + 1e-12);
        }
    }
}

TEST_CASE("kappa from Q") {
    CHECK(effective::kappa_from_q(2.0, 1.0) == 1.0);
    CHECK(effective::kappa_from_q(3.4e11, 1.7e5) == doctest::Approx(1e6).epsilon(1e-12));
    CHECK(effective::kappa_from_q(1.0, 1e300) < 1e-299);
    CHECK_THROWS_AS(effective::kappa_from_q(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(effective::kappa_from_q(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("significance estimate") {
    const auto est = effective::significance_estimate(1e6, 3.4e11, 1e-15, std::nullopt);
    CHECK(est.efield_hz == doctest::Approx(4.1231056e8).epsilon(1e-6));
    REQUIRE(est.efield_dc_esu_from_dipole.has_value());
    // hbar * 2*pi*efield / d, frozen from a desk computation in CGS units
    CHECK(*est.efield_dc_esu_from_dipole == doctest::Approx(2.732e-3).epsilon(1e-3));
    CHECK_FALSE(est.efield_dc_esu_from_alpha0.has_value());

    // alpha0 route: alpha0 = kappa (per unit field^2) -> field = 1
    const auto est2 = effective::significance_estimate(1e6, 3.4e11, std::nullopt, 1e6);
    REQUIRE(est2.efield_dc_esu_from_alpha0.has_value());
    CHECK(*est2.efield_dc_esu_from_alpha0 == 1.0);

    CHECK_THROWS_AS(effective::significance_estimate(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(effective::significance_estimate(1.0, 0.0), std::invalid_argument);
}
