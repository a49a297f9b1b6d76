#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fracsemi/errors.hpp"
#include "fracsemi/quadrature.hpp"

using namespace fracsemi;

TEST_CASE("Gauss-Legendre rules are exact for polynomials of degree 2n-1") {
  for (int points : {1, 5, 10, 20}) {
    const auto& rule = quad::gauss_legendre(points);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(points));
    for (int degree = 0; degree < 2 * points; ++degree) {
      const double got = quad::fixed_gauss_legendre([&](double x) { return std::pow(x, degree); }, 0.0, 2.0, rule);
      CHECK(got == doctest::Approx(std::pow(2.0, degree + 1) / (degree + 1)).epsilon(1e-13));
    }
  }
  CHECK(&quad::gauss_legendre(7) == &quad::gauss_legendre(7));
}

TEST_CASE("adaptive integration") {
  auto r = quad::integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(r.evaluations > 0);

  // Integrable endpoint singularity.
  quad::Options opt;
  opt.rel_tol = 1e-10;
  auto sing = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  CHECK(sing.value == doctest::Approx(2.0).epsilon(1e-8));

  auto c = quad::integrate([](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0, std::numbers::pi);
  CHECK(c.value.real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.value.imag() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("budget exhaustion throws") {
  quad::Options opt;
  opt.rel_tol = 1e-15;
  opt.max_evaluations = 200;
  CHECK_THROWS_AS(quad::integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, opt), QuadratureError);
}
