#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "luttff/errors.hpp"
#include "luttff/scaling.hpp"
#include "luttff/xx_chain.hpp"

using namespace luttff;

TEST_CASE("closed-form exponents") {
  for (double xi : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
    CHECK(exponent(OperatorKind::boson, 0, xi) ==
          doctest::Approx(xi / 2.0).epsilon(1e-15));
    CHECK(exponent(OperatorKind::density, 1, xi) ==
          doctest::Approx(2.0 / xi).epsilon(1e-15));
  }
  CHECK(exponent(OperatorKind::fermion, 0, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(exponent(OperatorKind::density, 0, 1.0), domain_error);
}

TEST_CASE("exponents equal the squared branch weights") {
  for (double xi : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
    for (int m = 0; m <= 4; ++m) {
      for (OperatorKind kind :
           {OperatorKind::boson, OperatorKind::fermion, OperatorKind::density}) {
        if (kind == OperatorKind::density && m == 0) continue;
        const auto [a_r, a_l] = chiral_weights(kind, m, xi);
        CHECK(std::fabs(a_r * a_r + a_l * a_l - exponent(kind, m, xi)) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("correlator model evaluation") {
  const double length = 64.0;

  SUBCASE("staggered leading term at x = L/2") {
    CorrelatorModel model = xx_transverse_model(1.0, M_PI / 2.0);
    model.harmonics[0].amplitude = 0.6;
    // chord = L, cos(pi L/2) = (-1)^{L/2}
    const double expected = 0.6 * std::cos(M_PI * length / 2.0) /
                            std::pow(length, 0.5);
    CHECK(evaluate_correlator(model, length / 2.0, length) ==
          doctest::Approx(expected).epsilon(1e-13));
  }

  SUBCASE("density harmonic at x = L/2") {
    CorrelatorModel model = make_model(OperatorKind::density, 1.0, M_PI / 2.0, {1});
    model.harmonics[0].amplitude = 1.7;
    model.uniform_term.reset();
    const double expected =
        1.7 * std::cos(M_PI / 2.0 * length) / (length * length);
    CHECK(evaluate_correlator(model, length / 2.0, length) ==
          doctest::Approx(expected).epsilon(1e-13));
  }

  SUBCASE("separation domain") {
    const CorrelatorModel model = xx_transverse_model(1.0, M_PI / 2.0);
    CHECK_THROWS_AS(evaluate_correlator(model, 0.0, length), domain_error);
    CHECK_THROWS_AS(evaluate_correlator(model, length, length), domain_error);
  }
}

TEST_CASE("scaling relation round trips") {
  for (OperatorKind kind :
       {OperatorKind::boson, OperatorKind::fermion, OperatorKind::density}) {
    for (int m = (kind == OperatorKind::density ? 1 : 0); m <= 3; ++m) {
      for (double xi : {0.5, 1.0, 2.0}) {
        ScalingRelation rel;
        rel.kind = kind;
        rel.m = m;
        rel.xi = xi;
        rel.length = 96.0;
        rel.prefactor = relation_sign(kind, m) > 0 ? 0.8 : -0.8;
        rel.formfactor_sq = formfactor_from_prefactor(rel);
        CHECK(rel.formfactor_sq >= 0.0);
        CHECK(prefactor_from_formfactor(rel) ==
              doctest::Approx(rel.prefactor).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("relation specializations") {
  // boson m = 0: C^2 = (2/L)^{xi/2} C_0; at L = 2 the scale factor is 1.
  ScalingRelation boson0{OperatorKind::boson, 0, 1.0, 2.0, 0.37, 0.0};
  CHECK(formfactor_from_prefactor(boson0) == doctest::Approx(0.37));

  ScalingRelation boson_l{OperatorKind::boson, 0, 1.0, 128.0, 0.37, 0.0};
  CHECK(formfactor_from_prefactor(boson_l) ==
        doctest::Approx(std::pow(2.0 / 128.0, 0.5) * 0.37).epsilon(1e-14));

  // density m = 1: C_1^2 = (1/2)(2/L)^{2/xi} C_10.
  ScalingRelation dens{OperatorKind::density, 1, 1.0, 64.0, 2.0, 0.0};
  CHECK(formfactor_from_prefactor(dens) ==
        doctest::Approx(0.5 * std::pow(2.0 / 64.0, 2.0) * 2.0).epsilon(1e-14));

  // A sign-inconsistent prefactor is flagged rather than squared away.
  ScalingRelation odd{OperatorKind::boson, 1, 1.0, 64.0, 0.8, 0.0};
  CHECK_THROWS_AS(formfactor_from_prefactor(odd), inconsistency_error);
}

TEST_CASE("synthetic fit round trip") {
  const double length = 256.0;
  CorrelatorModel truth = make_model(OperatorKind::boson, 1.0, M_PI / 2.0, {0, 1});
  truth.harmonics[0].amplitude = 0.83;
  truth.harmonics[1].amplitude = -0.21;

  std::vector<std::pair<double, double>> samples;
  for (int x = 1; x < 128; ++x)
    samples.emplace_back(x, evaluate_correlator(truth, x, length));

  CorrelatorModel shape = truth;
  for (auto& h : shape.harmonics) h.amplitude = 0.0;
  const FitReport fit =
      fit_prefactors(samples, shape, length, 32.0, 96.0);
  CHECK(fit.model.harmonics[0].amplitude ==
        doctest::Approx(0.83).epsilon(1e-10));
  CHECK(fit.model.harmonics[1].amplitude ==
        doctest::Approx(-0.21).epsilon(1e-10));
  CHECK(fit.max_relative_residual <= 1e-10);
}

TEST_CASE("fit guards") {
  const double length = 64.0;
  CorrelatorModel shape = make_model(OperatorKind::boson, 1.0, M_PI / 2.0, {0});
  std::vector<std::pair<double, double>> samples;
  for (int x = 30; x <= 34; ++x) samples.emplace_back(x, 1.0 / std::sqrt(x));

  SUBCASE("too few samples") {
    CHECK_THROWS_AS(fit_prefactors(samples, shape, length, 30.0, 31.0),
                    fit_error);
  }

  SUBCASE("aliased wavenumbers are rank deficient") {
    CorrelatorModel aliased = shape;
    aliased.harmonics.push_back(aliased.harmonics[0]);  // identical column
    std::vector<std::pair<double, double>> grid;
    for (int x = 8; x <= 56; ++x) grid.emplace_back(x, 1.0 / std::sqrt(x));
    CHECK_THROWS_AS(fit_prefactors(grid, aliased, length, 8.0, 56.0),
                    fit_error);
  }
}

TEST_CASE("exact chain correlators pin the prefactors") {
  const int length = 256;
  const XxChainConfig config{length, length / 2};
  std::vector<std::pair<double, double>> transverse, density;
  for (int x = 1; x < length / 2; ++x) {
    transverse.emplace_back(x, transverse_correlator(config, x));
    density.emplace_back(x, density_correlator(config, x));
  }

  SUBCASE("density amplitude is exactly two in sigma-z units") {
    const FitReport fit =
        fit_prefactors(density, xx_density_model(1.0, M_PI / 2.0), length,
                       length / 8.0, 3.0 * length / 8.0);
    CHECK(fit.model.harmonics[0].amplitude ==
          doctest::Approx(2.0).epsilon(1e-6));
    CHECK(fit.model.uniform_term->sign_convention == -1);
    CHECK(fit.model.uniform_term->coefficient ==
          doctest::Approx(2.0).epsilon(1e-6));
    CHECK(fit.max_relative_residual <= 1e-9);
  }

  SUBCASE("transverse amplitude is stable across windows") {
    const FitReport inner =
        fit_prefactors(transverse, xx_transverse_model(1.0, M_PI / 2.0),
                       length, length / 8.0, length / 4.0);
    const FitReport outer =
        fit_prefactors(transverse, xx_transverse_model(1.0, M_PI / 2.0),
                       length, length / 4.0, 3.0 * length / 8.0);
    const double c0_inner = inner.model.harmonics[0].amplitude;
    const double c0_outer = outer.model.harmonics[0].amplitude;
    CHECK(std::fabs(c0_inner - c0_outer) / std::fabs(c0_outer) < 1e-2);
    CHECK(inner.max_relative_residual < 1e-2);
  }
}
