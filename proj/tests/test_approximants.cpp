#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rootapprox/approximant.hpp"
#include "rootapprox/oracles.hpp"

using namespace rootapprox;
using Catch::Approx;

TEST_CASE("standard schedule shapes") {
    SECTION("k=5 sigma=1 total=-3") {
        auto s = standard_schedule(5, rational(1), rational(1), rational(-3));
        CHECK(s.level_pows == std::vector<rational>{rational(2), rational(3, 2), rational(4, 3),
                                                    rational(5, 4), rational(-3, 5)});
        CHECK(s.term_exps.back() == rational(5));
    }
    SECTION("k=3 sigma=1/2 total=-1") {
        auto s = standard_schedule(3, rational(1, 2), rational(1), rational(-1));
        CHECK(s.level_pows == std::vector<rational>{rational(3, 2), rational(5, 4),
                                                    rational(-1, 3)});
    }
    SECTION("k=6 sigma=-1/2 total=1") {
        auto s = standard_schedule(6, rational(-1, 2), rational(1), rational(1));
        CHECK(s.level_pows ==
              std::vector<rational>{rational(1, 2), rational(3, 4), rational(5, 6),
                                    rational(7, 8), rational(9, 10), rational(1, 6)});
    }
    SECTION("degenerate outer power") {
        CHECK_THROWS_AS(standard_schedule(3, rational(1), rational(1), rational(0)), error);
    }
}

TEST_CASE("expand_at_zero first order") {
    // k=1: (1 + A1 x)^{n1} = 1 + n1 A1 x + ...
    nest_spec s = standard_schedule(1, rational(1), rational(1), rational(-2));
    auto e = expand_at_zero(s, {0.7}, 2);
    CHECK(coeff(e, rational(1)) == Approx(-2.0 * 0.7));
}

TEST_CASE("expand_at_zero telescoped linear coefficient") {
    // D5 schedule: product of the level powers is k n_k = -3
    nest_spec s = standard_schedule(5, rational(1), rational(1), rational(-3));
    double a1 = 0.1234;
    auto e = expand_at_zero(s, {a1, 0.0, 0.0, 0.0, 0.0}, 1);
    CHECK(coeff(e, rational(1)) == Approx(-3.0 * a1).epsilon(1e-12));
}

TEST_CASE("expand_at_zero reproduces the scattering ratio series") {
    nest_spec s = standard_schedule(3, rational(1), rational(1), rational(-1, 2));
    std::vector<double> params{0.133333, 0.012952, 0.016907}; // printed set
    auto e = expand_at_zero(s, params, 2);
    CHECK(coeff(e, rational(1)) == Approx(-0.066667).margin(1e-5));
    CHECK(coeff(e, rational(2)) == Approx(0.003429).margin(1e-5));
}

TEST_CASE("expand_at_infinity leading amplitude, scattering shape") {
    nest_spec s = standard_schedule(3, rational(1), rational(1), rational(-1, 2));
    std::vector<double> params{0.133333, 0.012952, 0.016907};
    auto e = expand_at_infinity(s, params, rational(1));
    auto closed = std::pow(std::pow(params[0] * params[0] + params[1], 1.5) + params[2],
                           -1.0 / 6.0);
    CHECK(closed == Approx(9.0 * pi / 15.0).margin(2e-4)); // printed set self-consistency
    rational lead = e.exponent_at(*e.first_nonzero());
    CHECK(lead == rational(1, 2));
    CHECK(coeff(e, lead) == Approx(closed).epsilon(1e-12));
    CHECK(amplitude_at_infinity(s, params) == Approx(closed).epsilon(1e-12));
}

TEST_CASE("expand_at_infinity k=1 binomial") {
    nest_spec s = standard_schedule(1, rational(1), rational(1), rational(2));
    double a1 = 0.8;
    auto e = expand_at_infinity(s, {a1}, rational(1));
    // (1 + A1 x)^2 = A1^2 x^2 (1 + 2/(A1 x) + ...)
    rational lead = e.exponent_at(*e.first_nonzero());
    CHECK(lead == rational(-2));
    CHECK(coeff(e, rational(-2)) == Approx(a1 * a1));
    CHECK(coeff(e, rational(-1)) == Approx(2.0 * a1));
}

TEST_CASE("amplitude_at_infinity trivial and dominance rules") {
    nest_spec s = standard_schedule(1, rational(1), rational(1), rational(2));
    CHECK(amplitude_at_infinity(s, {1.0}) == Approx(1.0));
    // sigma = 1/2: earlier levels are subdominant, amplitude = A_k^{n_k}
    nest_spec h = standard_schedule(3, rational(1, 2), rational(1), rational(-1));
    CHECK(amplitude_at_infinity(h, {0.3, 0.2, 0.5}) ==
          Approx(std::pow(0.5, -1.0 / 3.0)).epsilon(1e-12));
    // negative final amplitude
    nest_spec t = standard_schedule(2, rational(1), rational(1), rational(-1));
    CHECK_THROWS_AS(amplitude_at_infinity(t, {0.1, -5.0}), error);
}

TEST_CASE("log-slot nest expands on both sides") {
    // ((1+A1 z)^2 + A2 z^2)^{3/2} + A3 z^2 ln(1+z) + A4 z^3, outer -1/6
    nest_spec s;
    s.term_exps = {rational(1), rational(2), rational(2), rational(3)};
    s.level_pows = {rational(2), rational(3, 2), rational(1), rational(-1, 6)};
    s.log_slots[3] = rational(1);
    std::vector<double> a{0.6, -0.1, 0.26, -0.04};
    // at zero the log term enters at z^3: orders 1 and 2 see only A1, A2
    auto e0 = expand_at_zero(s, a, 2);
    CHECK(coeff(e0, rational(1)) == Approx(-0.5 * a[0]).epsilon(1e-12));
    CHECK(coeff(e0, rational(2)) ==
          Approx(0.375 * a[0] * a[0] - 0.25 * a[1]).epsilon(1e-12));
    // at infinity the log appears at relative offset 1 with coefficient
    // A3/(6 a4) after normalization
    auto ei = expand_at_infinity(s, a, rational(1));
    rational lead = ei.exponent_at(*ei.first_nonzero());
    double amp = coeff(ei, lead);
    double a4 = std::pow(a[0] * a[0] + a[1], 1.5) + a[3];
    CHECK(amp == Approx(std::pow(a4, -1.0 / 6.0)).epsilon(1e-10));
    CHECK(coeff(ei, lead + rational(1), 1) / amp == Approx(a[2] / (6.0 * a4)).epsilon(1e-10));
}

TEST_CASE("evaluate limits and errors") {
    // scattering S3* with printed parameters
    nest_spec s = standard_schedule(3, rational(1), rational(1), rational(-1, 2));
    s.prefactor_amp = 1.0 / 9.0;
    s.prefactor_pow = rational(1);
    s.var_pow = rational(2);
    root_approximant r{s, {0.133333, 0.012952, 0.016907}};
    CHECK(evaluate(r, 0.0) == 0.0);
    for (double x : {1e3, 1e4, 1e5, 1e6})
        CHECK(evaluate(r, x) == Approx(pi / 15.0).epsilon(0.01));

    // negative base reporting
    nest_spec t = standard_schedule(2, rational(1), rational(1), rational(-1));
    root_approximant bad{t, {-2.0, 1.0}};
    CHECK_THROWS_AS(evaluate(bad, 1.0), error); // (1 - 2x)^2 fine, but outer base...
    CHECK_THROWS_AS(evaluate(bad, 0.5), error); // base hits zero at the inner level
}

TEST_CASE("evaluate at x = 0 with inverted variable") {
    // nest in u = x^{-1/2}, prefactor x^{-1}: finite limit at 0 via amplitude
    nest_spec s = standard_schedule(2, rational(1), rational(1), rational(-2));
    s.prefactor_amp = -0.5;
    s.prefactor_pow = rational(-1);
    s.var_pow = rational(-1, 2);
    root_approximant r{s, {1.0, 2.0}};
    // pref_pow + var_pow * (-2) = -1 + 1 = 0: value = pref * amplitude
    double amp = amplitude_at_infinity(s, r.params);
    CHECK(evaluate(r, 0.0) == Approx(-0.5 * amp));
    CHECK(evaluate(r, 1e-12) == Approx(-0.5 * amp).epsilon(1e-5));
}

TEST_CASE("round-trip: expansions reproduce imposed data") {
    nest_spec s = standard_schedule(4, rational(1), rational(1), rational(3, 2));
    std::vector<double> a{0.4, 0.1, -0.05, 0.3};
    auto e0 = expand_at_zero(s, a, 4);
    auto ei = expand_at_infinity(s, a, rational(2));
    // evaluate agrees with the zero expansion as x -> 0, at the x^5 rate
    root_approximant r{s, a};
    auto partial_sum_err = [&](double x) {
        double series = 1.0;
        for (int m = 1; m <= 4; ++m) series += coeff(e0, rational(m)) * std::pow(x, m);
        return std::abs(evaluate(r, x) - series);
    };
    double e_coarse = partial_sum_err(1e-1);
    double e_fine = partial_sum_err(1e-2);
    CHECK(e_fine <= e_coarse * 3e-5 + 1e-15); // one decade: factor ~1e-5
    // amplitude consistency between the closed form and the series
    rational lead = ei.exponent_at(*ei.first_nonzero());
    CHECK(amplitude_at_infinity(s, a) == Approx(coeff(ei, lead)).epsilon(1e-12));
}

TEST_CASE("additive approximant evaluation and expansions") {
    additive_approximant a;
    a.terms = {{-0.044941, 0.266023, rational(-1)}, {0.017526, 0.133344, rational(-3, 2)}};
    // value at zero: A1 + A2 = -0.027415, close to -pi^2/360 = -0.027416
    CHECK(evaluate_additive(a, 0.0) == Approx(-0.027415).margin(1e-9));
    CHECK(evaluate_additive(a, 0.0) == Approx(-pi * pi / 360.0).margin(2e-6));
    // leading infinity coefficient A1/B1 vs the low-density b1 = -0.168939
    auto ei = expand_additive(a, match_condition::side_t::infinity, 2);
    CHECK(coeff(ei, rational(1)) == Approx(-0.044941 / 0.266023).epsilon(1e-12));
    CHECK(coeff(ei, rational(1)) == Approx(-0.168939).margin(1e-5));
    // zero expansion: sum A_i (1 + n_i B_i x + ...)
    auto e0 = expand_additive(a, match_condition::side_t::zero, 2);
    double lin = -0.044941 * (-1.0) * 0.266023 + 0.017526 * (-1.5) * 0.133344;
    CHECK(coeff(e0, rational(1)) == Approx(lin).epsilon(1e-12));
    // single term (A=1, B=1, n=1) at x=1 -> 2
    additive_approximant one;
    one.terms = {{1.0, 1.0, rational(1)}};
    CHECK(evaluate_additive(one, 1.0) == Approx(2.0));
    CHECK_THROWS_AS(evaluate_additive(a, -10.0), error);
}
