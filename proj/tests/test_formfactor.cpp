#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "direct_det.hpp"
#include "luttff/errors.hpp"
#include "luttff/formfactor.hpp"
#include "rational_ff.hpp"

using namespace luttff;

TEST_CASE("edge factors at small momenta") {
  for (double a : {-1.7, -0.5, 0.3, 0.8, 1.2}) {
    CHECK(f_plus(1, a) == doctest::Approx(a).epsilon(1e-14));
    CHECK(f_plus(2, a) == doctest::Approx(a * (a + 1.0)).epsilon(1e-14));
    CHECK(f_minus(0, a) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f_minus(-1, a) == doctest::Approx(1.0 - a).epsilon(1e-14));
  }
  CHECK(f_plus(2, -0.5) == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(f_minus(-1, -0.5) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("Gamma recurrence ratios") {
  const double weights[] = {-1.9, -1.3, -0.5, -0.1, 0.3, 0.8, 1.2, 1.9};
  for (double a : weights) {
    for (int p = 1; p <= 50; ++p) {
      const double lhs = f_plus(p + 1, a) / f_plus(p, a);
      CHECK(lhs == doctest::Approx((p + a) / p).epsilon(1e-12));
    }
    for (int q = 0; q >= -50; --q) {
      const double lhs = f_minus(q - 1, a) / f_minus(q, a);
      CHECK(lhs == doctest::Approx((1.0 - q - a) / (1.0 - q)).epsilon(1e-12));
    }
  }
}

TEST_CASE("integer weights produce exact zeros") {
  CHECK(f_plus(2, -1.0) == 0.0);
  CHECK(f_plus(3, 0.0) == 0.0);
  CHECK(f_plus(1, -1.0) == -1.0);  // continuation stays finite past the pole
  CHECK(f_minus(-1, 1.0) == 0.0);
  CHECK(f_minus(0, 1.0) == 1.0);

  const FormFactorValue f = formfactor({{1}, {-1}}, {1.0});
  CHECK(f.zero);
  CHECK(f.gamma_pole);
  CHECK(f.value() == 0.0);
}

TEST_CASE("Cauchy determinant closed form") {
  CHECK(cauchy_det({}, {}) == doctest::Approx(1.0));
  CHECK(cauchy_det({1}, {0}) == doctest::Approx(1.0));
  // [[1/2, 1/3], [1, 1/2]] -> 1/4 - 1/3 = -1/12
  CHECK(cauchy_det({2, 1}, {0, -1}) ==
        doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
  CHECK_THROWS_AS(cauchy_det({2, 2}, {0, -1}), invalid_state_error);
  CHECK_THROWS_AS(cauchy_det({2, 1}, {0, 0}), invalid_state_error);
}

TEST_CASE("closed form agrees with the numeric determinant") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<int> particle_pool(40), hole_pool(40);
    for (int i = 0; i < 40; ++i) {
      particle_pool[i] = i + 1;
      hole_pool[i] = -i;
    }
    std::shuffle(particle_pool.begin(), particle_pool.end(), rng);
    std::shuffle(hole_pool.begin(), hole_pool.end(), rng);
    std::vector<int> p(particle_pool.begin(), particle_pool.begin() + n);
    std::vector<int> q(hole_pool.begin(), hole_pool.begin() + n);
    std::sort(p.rbegin(), p.rend());
    std::sort(q.rbegin(), q.rend());

    const double direct = luttff_test::direct_cauchy_det(p, q);
    const double closed = cauchy_det(p, q);
    CHECK(std::fabs(closed - direct) <=
          1e-10 * std::max(std::fabs(direct), 1e-300));
  }
}

TEST_CASE("single-branch formfactors") {
  for (double a : {-0.5, 0.3, 1.2}) {
    CHECK(formfactor({}, {a}).value() == doctest::Approx(1.0));
    CHECK(formfactor({{1}, {0}}, {a}).value() ==
          doctest::Approx(a).epsilon(1e-14));
    // det * f+(2) f+(1) f-(0) f-(-1) = (-1/12) a^2 (a+1)(1-a)
    CHECK(formfactor({{2, 1}, {0, -1}}, {a}).value() ==
          doctest::Approx(-a * a * (1.0 - a * a) / 12.0).epsilon(1e-13));
  }
  CHECK(formfactor({{2, 1}, {0, -1}}, {-0.5}).value() ==
        doctest::Approx(-1.0 / 64.0).epsilon(1e-14));
}

TEST_CASE("rational oracle pins the floating path at low levels") {
  // Every state of level <= 8 against the same product form in exact
  // 128-bit fractions, at a = -1/2 and a = 1/3.
  const std::pair<long long, long long> weights[] = {{-1, 2}, {1, 3}};
  for (const auto& [a_num, a_den] : weights) {
    const double a = static_cast<double>(a_num) / a_den;
    for (int m = 0; m <= 8; ++m) {
      for (const auto& s : enumerate_level(m)) {
        const double exact =
            luttff_test::rational_formfactor(s, a_num, a_den).value();
        const double floating = formfactor(s, {a}).value();
        if (exact == 0.0)
          CHECK(floating == 0.0);
        else
          CHECK(std::fabs(floating - exact) <= 1e-14 * std::fabs(exact));
      }
    }
  }
}

TEST_CASE("branch weights") {
  for (double xi : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
    const double s = std::sqrt(xi);

    const auto [b_r, b_l] = chiral_weights(OperatorKind::boson, 0, xi);
    CHECK(b_r == doctest::Approx(-s / 2.0).epsilon(1e-15));
    CHECK(b_l == doctest::Approx(-s / 2.0).epsilon(1e-15));
    CHECK(b_r * b_r + b_l * b_l == doctest::Approx(xi / 2.0).epsilon(1e-14));

    const auto [d_r, d_l] = chiral_weights(OperatorKind::density, 1, xi);
    CHECK(d_r == doctest::Approx(1.0 / s).epsilon(1e-15));
    CHECK(d_l == doctest::Approx(1.0 / s).epsilon(1e-15));
    CHECK(d_r * d_r + d_l * d_l == doctest::Approx(2.0 / xi).epsilon(1e-14));
  }

  const auto [f_r, f_l] = chiral_weights(OperatorKind::fermion, 0, 1.0);
  CHECK(std::fabs(f_r) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(f_l) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(f_r * f_r + f_l * f_l == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(chiral_weights(OperatorKind::density, 0, 1.0), domain_error);
  CHECK_THROWS_AS(chiral_weights(OperatorKind::boson, 0, -1.0), domain_error);
}

TEST_CASE("weights stay continuous in the harmonic index") {
  for (double xi : {0.5, 1.0, 2.0}) {
    for (int m = 0; m < 4; ++m) {
      const auto [r0, l0] = chiral_weights(OperatorKind::boson, m, xi);
      const auto [r1, l1] = chiral_weights(OperatorKind::boson, m + 1, xi);
      CHECK(std::fabs(r1 - r0) == doctest::Approx(1.0 / std::sqrt(xi)));
      CHECK(std::fabs(l1 - l0) == doctest::Approx(1.0 / std::sqrt(xi)));
    }
  }
}

TEST_CASE("two-branch composition") {
  const ChiralState one{{1}, {0}};
  const double lowest = 0.37;

  const ExcitedState ground{{}, {}, 0, 0};
  CHECK(total_formfactor(ground, OperatorKind::boson, 1.7, lowest).value() ==
        doctest::Approx(lowest));

  const ExcitedState right_only{one, {}, 0, 0};
  for (double xi : {0.5, 1.0, 2.0}) {
    const auto [a_r, a_l] = chiral_weights(OperatorKind::boson, 0, xi);
    (void)a_l;
    CHECK(total_formfactor(right_only, OperatorKind::boson, xi, lowest).value() ==
          doctest::Approx(lowest * a_r).epsilon(1e-13));
  }

  const ExcitedState both{one, one, 0, 0};
  const FormFactorValue f = total_formfactor(both, OperatorKind::boson, 1.0, lowest);
  CHECK(std::fabs(f.value()) ==
        doctest::Approx(lowest * 0.25).epsilon(1e-13));
}
