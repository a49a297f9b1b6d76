#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracsemi/quadrature.hpp"
#include "fracsemi/specfun.hpp"

using namespace fracsemi;
using std::numbers::pi;

namespace {

// int_0^inf g(tau) f_{t,s}(tau) dtau in v = ln tau.
template <class G>
double against_density(double t, double s, G g) {
  quad::Options opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-14;
  opt.initial_panels = 16;
  auto f = [&](double v) {
    const double tau = std::exp(v);
    return g(tau) * stable_density(t, s, tau) * tau;
  };
  // Upper limit: the tail mass beyond tau is of order tau^{-s}.
  return quad::integrate(f, -40.0, 30.0 / s, opt).value;
}

}  // namespace

TEST_CASE("fractional order preconditions") {
  CHECK_NOTHROW(FractionalOrder(0.5));
  CHECK_NOTHROW(FractionalOrder(0.01, 3));
  CHECK_THROWS_AS(FractionalOrder(0.0), std::domain_error);
  CHECK_THROWS_AS(FractionalOrder(1.0), std::domain_error);
  CHECK_THROWS_AS(FractionalOrder(1.5), std::domain_error);
  CHECK_THROWS_AS(FractionalOrder(0.5, 0), std::domain_error);
  CHECK_THROWS_AS(FractionalOrder(0.5, 4), std::domain_error);
  CHECK_THROWS_AS(FractionalOrder(std::nan("")), std::domain_error);
  CHECK(FractionalOrder(0.25, 2).decay_exponent() == doctest::Approx(4.0));
}

TEST_CASE("gamma function") {
  CHECK(gamma_function(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
  CHECK(gamma_function(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_function(0.1) == doctest::Approx(9.513507698668732).epsilon(1e-13));
  for (double x = 0.01; x < 30.0; x *= 1.37) {
    CAPTURE(x);
    CHECK(gamma_function(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  }
  // Recurrence Gamma(x+1) = x Gamma(x).
  for (double x : {0.013, 0.3, 0.77, 2.5, 9.1}) CHECK(gamma_function(x + 1) == doctest::Approx(x * gamma_function(x)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_function(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_function(-1.5), std::domain_error);
}

TEST_CASE("normalization constant") {
  // At s = 1/2: Gamma((N+1)/2) pi^{-(N+1)/2}.
  CHECK(frac_constant(FractionalOrder(0.5, 1)).value == doctest::Approx(1.0 / pi).epsilon(1e-14));
  CHECK(frac_constant(FractionalOrder(0.5, 2)).value == doctest::Approx(std::tgamma(1.5) / std::pow(pi, 1.5)).epsilon(1e-14));
  CHECK(frac_constant(FractionalOrder(0.5, 3)).value == doctest::Approx(1.0 / (pi * pi)).epsilon(1e-14));
  for (double s : {0.1, 0.25, 0.75, 0.9}) {
    for (int dim : {1, 2, 3}) {
      const double expected =
          s * std::pow(4.0, s) * std::tgamma((2 * s + dim) / 2.0) / (std::pow(pi, dim / 2.0) * std::tgamma(1 - s));
      CHECK(frac_constant(FractionalOrder(s, dim)).value == doctest::Approx(expected).epsilon(1e-13));
    }
  }
  // C_{1,s} ~ 2 (1 - s) as s -> 1, the normalization behind the Laplacian limit.
  CHECK(frac_constant(FractionalOrder(0.999999)).value / (2 - 2 * 0.999999) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("gaussian kernel") {
  CHECK(gaussian_kernel(1.0, 0.0, 1) == doctest::Approx(1.0 / std::sqrt(4 * pi)));
  CHECK(gaussian_kernel(0.25, 1.0, 3) == doctest::Approx(std::pow(pi, -1.5) * std::exp(-1.0)));
  const double mass = quad::integrate([](double x) { return gaussian_kernel(0.3, std::abs(x), 1); }, -20, 20).value;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("stable density: closed form at s = 1/2") {
  for (double tau : {0.01, 0.3, 1.0, 7.0, 1e4}) {
    const double expected = 1.0 / (2 * std::sqrt(pi)) * std::pow(tau, -1.5) * std::exp(-1.0 / (4 * tau));
    CHECK(stable_density(1.0, 0.5, tau) == doctest::Approx(expected).epsilon(1e-14));
  }
  // The general representation agrees as s crosses 1/2.
  CHECK(stable_density(1.0, 0.5 + 1e-9, 0.7) == doctest::Approx(stable_density(1.0, 0.5, 0.7)).epsilon(1e-7));
}

TEST_CASE("stable density: mass, Laplace transform and scaling") {
  for (double s : {0.2, 0.35, 0.5, 0.7, 0.9}) {
    CAPTURE(s);
    CHECK(against_density(1.0, s, [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-9));
    for (double lambda : {0.5, 1.0, 3.0}) {
      const double lt = against_density(1.0, s, [&](double tau) { return std::exp(-lambda * tau); });
      CHECK(lt == doctest::Approx(std::exp(-std::pow(lambda, s))).epsilon(1e-9));
    }
    for (double tau : {0.05, 1.0, 20.0}) {
      const double t = 2.5;
      const double scaled = std::pow(t, -1.0 / s) * stable_density(1.0, s, tau * std::pow(t, -1.0 / s));
      CHECK(stable_density(t, s, tau) == doctest::Approx(scaled).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(stable_density(1.0, 0.3, 0.0), std::domain_error);
  CHECK(stable_density(1.0, 0.7, 1e-3) >= 0.0);
}
