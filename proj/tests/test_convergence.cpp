#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pointint/convergence.hpp"

using namespace pointint;

namespace {

const PointParams kSetGamma(0.0, 3.0, -2.0, -7.0, 5.0);
const PointParams kSetNoGamma(0.0, 5.0, 3.0, 0.0, 0.2);
const BoxDomain kBox(-15.0, 15.0);

}  // namespace

TEST_CASE("default spacing sequence") {
  const auto seq = default_a_seq();
  REQUIRE(seq.size() == 9);
  CHECK(seq.front() == 0.2);
  CHECK(seq.back() == 1e-6);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    CHECK(seq[i] < seq[i - 1]);
  }
}

TEST_CASE("limit table: gamma != 0 set converges element-wise") {
  const auto rows = u_limit_table(kSetGamma, 1.0, default_a_seq());
  REQUIRE(rows.size() == 9);

  // tightest row: all four elements within 1e-4 of the target at a = 1e-6
  const auto& last = rows.back();
  CHECK(last.a == 1e-6);
  for (const double err : last.element_errors) {
    CHECK(err < 1e-4);
    CHECK(err > 0.0);
  }

  // nonincreasing over the last three decades
  for (std::size_t i = rows.size() - 3; i < rows.size(); ++i) {
    for (int e = 0; e < 4; ++e) {
      CHECK(rows[i].element_errors[e] <= rows[i - 1].element_errors[e]);
    }
  }

  // determinant identity holds on every row
  for (const auto& row : rows) {
    CHECK(row.det_error < 1e-8);
    CHECK_FALSE(row.k_n_error.has_value());
  }
}

TEST_CASE("limit table: gamma = 0 set") {
  const auto rows = u_limit_table(kSetNoGamma, 1.0, default_a_seq());
  for (const auto& row : rows) {
    CHECK(row.det_error < 1e-8);
  }
  for (const double err : rows.back().element_errors) {
    CHECK(err < 1e-4);
  }
  // the (2,1) element leaks only through free propagation: ~2a at a = 1e-5
  const auto& r5 = rows[rows.size() - 2];
  CHECK(r5.a == 1e-5);
  CHECK(r5.element_errors[2] < 3e-5);
}

TEST_CASE("limit table: single delta stays a single delta") {
  const PointParams p = PointParams::single_delta(-3.0);
  const std::vector<double> a_seq{0.2, 0.01, 1e-4, 1e-6};
  const auto rows = u_limit_table(p, 1.0, a_seq);
  // the realized strengths don't depend on a; the residual errors are pure
  // free-flight leakage, linear in a
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (int e = 0; e < 4; ++e) {
      CHECK(rows[i].element_errors[e] <= rows[i - 1].element_errors[e]);
    }
  }
  for (const double err : rows.back().element_errors) {
    CHECK(err < 1e-5);
  }
  // the beta-element deviation is exactly |v sin^2(ka) + k sin(2ka)|: pure
  // free-flight leakage with a |v| (ka)^2 interaction correction
  for (const auto& row : rows) {
    const double k = 1.0, v = -3.0;
    const double expected = std::abs(v * std::sin(k * row.a) *
                                         std::sin(k * row.a) +
                                     k * std::sin(2.0 * k * row.a));
    CHECK(row.element_errors[1] ==
          doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("limit table validates its inputs") {
  const std::vector<double> ascending{0.01, 0.2};
  CHECK_THROWS_AS(u_limit_table(kSetGamma, 1.0, ascending), ValidationError);
  const std::vector<double> with_zero{0.2, 0.0};
  CHECK_THROWS_AS(u_limit_table(kSetGamma, 1.0, with_zero), ValidationError);
  CHECK_THROWS_AS(u_limit_table(kSetGamma, -1.0, default_a_seq()),
                  ValidationError);
}

TEST_CASE("expansion fit lands on the cubic remainder") {
  const std::vector<double> a_seq{1e-2, 1e-3, 1e-4};
  const double slope = expansion_check(kSetGamma, 1.0, a_seq);
  CHECK(slope > 2.95);
  CHECK(slope < 3.05);

  // another gamma and wave number
  const PointParams p(0.0, 1.0, 0.0, 1.0, 1.0);  // alpha*delta - beta*gamma = 1
  const double slope2 = expansion_check(p, 2.0, a_seq);
  CHECK(slope2 > 2.95);
  CHECK(slope2 < 3.05);
}

TEST_CASE("expansion residual magnitudes match the remainder coefficient") {
  // leading remainder is -(4/3) k^2 a^3
  const PointParams p(0.0, 1.0, 0.0, 1.0, 1.0);
  const ThreeDeltaRealization r = realize(p, 1e-3);
  const RealMat2 u = u_elements_closed_form(r, 2.0);
  const double res = u.a21 - 1.0 - 2e-3 + (1.0 / 3.0) * 4.0 * 1e-6;
  CHECK(std::abs(res) < 1e-7);
  CHECK(std::abs(res) ==
        doctest::Approx((4.0 / 3.0) * 4.0 * 1e-9).epsilon(0.01));
}

TEST_CASE("expansion residual vanishes identically at k = 0") {
  // power-of-two spacings keep gamma/a^2 and the recombination exact
  for (const double a : {0.25, 0.0625}) {
    const ThreeDeltaRealization r = realize(kSetGamma, a);
    const RealMat2 u = u_elements_closed_form(r, 0.0);
    const double res = u.a21 - (-7.0) - 2.0 * a;
    CHECK(res == 0.0);
  }
}

TEST_CASE("expansion check rejects gamma = 0") {
  CHECK_THROWS_AS(expansion_check(kSetNoGamma, 1.0, default_a_seq()),
                  ValidationError);
}

TEST_CASE("first-order coefficient of the (2,1) error") {
  // |u21 - gamma| / a -> 2 as a -> 0
  for (const double k : {0.3, 1.0}) {
    const ThreeDeltaRealization r = realize(kSetGamma, 1e-4);
    const RealMat2 u = u_elements_closed_form(r, k);
    const double ratio = std::abs(u.a21 - (-7.0)) / 1e-4;
    CHECK(ratio > 1.8);
    CHECK(ratio < 2.2);
  }
}

TEST_CASE("eigenvalue drift: gamma != 0 reference rows") {
  const std::vector<double> a_seq{0.2, 0.1, 0.05, 0.02, 0.01, 1e-3};
  const auto rows = eigenvalue_drift(kSetGamma, kBox, 10, a_seq);
  REQUIRE(rows.size() == a_seq.size());

  CHECK(std::abs(rows[0].k_n - 0.905264) < 1e-6);
  CHECK(rows[0].error == doctest::Approx(0.905264678 - 0.894964460).epsilon(1e-4));

  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::abs(rows[i].error) < std::abs(rows[i - 1].error));
  }
  CHECK(std::abs(rows.back().error) < 1e-3);
}

TEST_CASE("eigenvalue drift: gamma = 0 reference rows") {
  const std::vector<double> a_seq{0.2, 0.05, 0.01, 1e-3};
  const auto rows = eigenvalue_drift(kSetNoGamma, kBox, 7, a_seq);
  CHECK(std::abs(rows[0].k_n - 0.775312) < 1e-6);
  CHECK(rows[0].error < 0.0);  // approaches from below
  CHECK(std::abs(rows.back().error) < 1e-3);
}

TEST_CASE("eigenvalue drift: free parameters never move") {
  const std::vector<double> a_seq{0.2, 0.05};
  const auto rows =
      eigenvalue_drift(PointParams::free_particle(), kBox, 3, a_seq);
  for (const auto& row : rows) {
    CHECK(std::abs(row.error) < 1e-9);
  }
}

TEST_CASE("eigenvalue drift: single delta is exact at every spacing") {
  const std::vector<double> a_seq{0.2, 0.01};
  const auto rows =
      eigenvalue_drift(PointParams::single_delta(2.5), kBox, 4, a_seq);
  for (const auto& row : rows) {
    CHECK(std::abs(row.error) < 1e-9);
  }
}

TEST_CASE("eigenvalue drift rejects states below the positive window") {
  const std::vector<double> a_seq{0.2};
  CHECK_THROWS_AS(eigenvalue_drift(kSetGamma, kBox, 2, a_seq),
                  NotAnEigenvalue);
}
