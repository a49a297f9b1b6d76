#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracsemi/errors.hpp"
#include "fracsemi/fraclap.hpp"
#include "fracsemi/quadrature.hpp"
#include "fracsemi/specfun.hpp"

using namespace fracsemi;
using std::numbers::pi;

namespace {

ScalarField1D gaussian(double centre = 0.0, double width = 1.0) {
  return {[=](double x) { return std::exp(-(x - centre) * (x - centre) / (width * width)); }, {1.0, 10.0},
          Smoothness::c2_near_target};
}

ScalarField1D bump() {
  return {[](double x) { return std::abs(x) < 1.0 ? std::pow(1.0 - x * x, 4) : 0.0; }, {1.0, 10.0},
          Smoothness::c2_near_target};
}

// (-Delta)^s e^{-x^2} at 0.
double gaussian_at_origin(double s) { return std::pow(4.0, s) * std::tgamma(s + 0.5) / std::sqrt(pi); }

}  // namespace

TEST_CASE("principal value: Gaussian oracle at the origin") {
  for (double s : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    CAPTURE(s);
    CHECK(principal_value_flap(gaussian(), 0.0, s) == doctest::Approx(gaussian_at_origin(s)).epsilon(1e-8));
  }
}

TEST_CASE("principal value: constants are annihilated") {
  const ScalarField1D one{[](double) { return 1.0; }, {1.0, 0.0}, Smoothness::c2_near_target};
  CHECK(principal_value_flap(one, 0.3, 0.4) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("principal value: linearity with a fixed truncation schedule") {
  PrincipalValueOptions fixed;
  fixed.fixed_halvings = 8;
  const auto u = gaussian(0.2, 0.8), v = bump();
  const double alpha = 1.7, beta = -0.6;
  const ScalarField1D w{[&](double x) { return alpha * u(x) + beta * v(x); }, {3.0, 8.0}, Smoothness::c2_near_target};
  for (double s : {0.3, 0.6}) {
    for (double x : {0.0, 0.4}) {
      const double lhs = principal_value_flap(w, x, s, fixed);
      const double pu = principal_value_flap(u, x, s, fixed), pv = principal_value_flap(v, x, s, fixed);
      const double scale = std::abs(alpha * pu) + std::abs(beta * pv);
      CHECK(std::abs(lhs - (alpha * pu + beta * pv)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("principal value: translation, dilation and reflection") {
  const double c = 1.25, lambda = 2.0;
  for (double s : {0.25, 0.5, 0.75}) {
    CAPTURE(s);
    const double base = principal_value_flap(gaussian(), 0.35, s);
    CHECK(principal_value_flap(gaussian(c), 0.35 + c, s) == doctest::Approx(base).epsilon(1e-8));
    // u(lambda x) has (-Delta)^s equal to lambda^{2s} ((-Delta)^s u)(lambda x).
    const double narrow = principal_value_flap(gaussian(0.0, 1.0 / lambda), 0.35 / lambda, s);
    CHECK(narrow == doctest::Approx(std::pow(lambda, 2 * s) * base).epsilon(1e-8));
    CHECK(principal_value_flap(gaussian(), -0.35, s) == doctest::Approx(base).epsilon(1e-10));
  }
}

TEST_CASE("truncated operator against direct quadrature") {
  const auto u = gaussian();
  const double s = 0.4, x = 0.5, eps = 0.3;
  quad::Options opt;
  opt.rel_tol = 1e-12;
  opt.initial_panels = 8;
  auto integrand = [&](double y) { return (2 * u(x) - u(x + y) - u(x - y)) * std::pow(y, -1 - 2 * s); };
  double direct = quad::integrate(integrand, eps, 60.0, opt).value;
  direct += 2 * u(x) * std::pow(60.0, -2 * s) / (2 * s);  // u(x +- y) below 1e-300 there
  CHECK(truncated_flap(u, x, eps, s) == doctest::Approx(frac_constant(FractionalOrder(s)).value * direct).epsilon(1e-10));
}

TEST_CASE("Balakrishnan route agrees with the principal value") {
  for (double s : {0.3, 0.5, 0.8}) {
    CAPTURE(s);
    CHECK(balakrishnan_flap(gaussian(), 0.0, s) == doctest::Approx(gaussian_at_origin(s)).epsilon(1e-6));
    CHECK(balakrishnan_flap(bump(), 0.3, s) == doctest::Approx(principal_value_flap(bump(), 0.3, s)).epsilon(1e-5));
  }
}

TEST_CASE("membership in L^1_s") {
  const ScalarField1D one{[](double) { return 1.0; }, {1.0, 0.0}};
  auto m = membership_L1s(one, 0.5);
  CHECK(m.member);
  CHECK(m.weight_integral == doctest::Approx(2.0).epsilon(1e-12));

  const ScalarField1D abs_x{[](double x) { return std::abs(x); }, {1.0, -1.0}};
  m = membership_L1s(abs_x, 0.25);
  CHECK_FALSE(m.member);
  CHECK(std::isinf(m.weight_integral));
  m = membership_L1s(abs_x, 0.75);
  CHECK(m.member);
  CHECK(m.weight_integral == doctest::Approx(8.0 / 3.0).epsilon(1e-9));

  CHECK_THROWS_AS(truncated_flap(abs_x, 0.0, 0.1, 0.25), MembershipError);
  CHECK_THROWS_AS(principal_value_flap(abs_x, 0.0, 0.25), MembershipError);
}

TEST_CASE("principal value: error paths") {
  ScalarField1D rough = gaussian();
  rough.smoothness = Smoothness::rough;
  CHECK_THROWS_AS(principal_value_flap(rough, 0.0, 0.5), std::invalid_argument);
  PrincipalValueOptions bad;
  bad.eps0 = 2.0;
  CHECK_THROWS_AS(principal_value_flap(gaussian(), 0.0, 0.5, bad), std::domain_error);
  PrincipalValueOptions short_run;
  short_run.max_halvings = 2;
  CHECK_THROWS_AS(principal_value_flap(gaussian(), 0.0, 0.5, short_run), ConvergenceError);
  CHECK_THROWS_AS(truncated_flap(gaussian(), 0.0, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(principal_value_flap(gaussian(), 0.0, 1.0), std::domain_error);
}

TEST_CASE("convergence to the Laplacian form") {
  const auto rows = convergence_to_laplacian(gaussian(), gaussian(), {0.9, 0.99, 0.999});
  REQUIRE(rows.size() == 3);
  // lhs = int e^{-x^2} (-Delta)^s e^{-x^2} = 2^{s-1/2} Gamma(s + 1/2).
  for (const auto& row : rows) {
    CHECK(row.lhs == doctest::Approx(std::pow(2.0, row.s - 0.5) * std::tgamma(row.s + 0.5)).epsilon(1e-9));
    CHECK(row.rhs == doctest::Approx(std::sqrt(pi / 2)).epsilon(1e-10));
  }
  CHECK(rows[2].gap < rows[1].gap);
  CHECK(rows[1].gap < rows[0].gap);
}
