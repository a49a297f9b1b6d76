#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fracsemi/kernel.hpp"
#include "fracsemi/verify.hpp"

using namespace fracsemi;
using std::numbers::pi;

namespace {

DiscreteOperator op_on(double a, double b, std::size_t n, double s = 0.5) {
  return assemble_dirichlet(Grid1D(a, b, n), FractionalOrder(s));
}

double fitted(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.fitted_constants)
    if (k == key) return v;
  FAIL("missing fitted constant " << key);
  return 0.0;
}

}  // namespace

TEST_CASE("uniform generator is the top 53 bits of mt19937_64") {
  Uniform u(42), v(42);
  std::mt19937_64 reference(42);
  for (int k = 0; k < 100; ++k) {
    const double x = u();
    CHECK(x == static_cast<double>(reference() >> 11) * 0x1.0p-53);
    CHECK(x == v());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  const double y = u(-2.0, 3.0);
  CHECK(y >= -2.0);
  CHECK(y < 3.0);
}

TEST_CASE("kernel-level checks") {
  auto agree = check_kernel_agreement({0.5, 0.7}, {1.0}, {0.0, 2.0});
  CHECK(agree.pass);
  CHECK(agree.samples == 4);

  auto bounds = check_two_sided_bounds(FractionalOrder(0.5), {1.0, 4.0}, {0.0, 1.0, 4.0});
  CHECK(bounds.pass);
  CHECK(fitted(bounds, "C1") == doctest::Approx(1.0 / pi).epsilon(1e-12));  // rho(t, 0) = 1/pi
  CHECK(fitted(bounds, "spread") == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(check_two_sided_bounds(FractionalOrder(0.5), {1.0}, {0.0, 1.0}, 1.5).pass);

  for (double s : {0.25, 0.5}) {
    auto ultra = check_ultracontractivity(FractionalOrder(s), {0.1, 1.0, 10.0});
    CHECK(ultra.pass);
    CHECK(fitted(ultra, "slope") == doctest::Approx(-1.0 / (2 * s)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(check_ultracontractivity(FractionalOrder(0.5), {1.0}), std::invalid_argument);
}

TEST_CASE("complex kernel bound") {
  const FractionalOrder o(0.5);
  auto r = check_complex_kernel_bound(o, 0.5, pi / 8, {1.0}, {0.0, 0.5, 1.0, 2.0, 4.0, 8.0});
  CHECK(r.pass);
  CHECK(std::isfinite(fitted(r, "M")));
  CHECK(check_complex_kernel_bound(o, 1.0, pi / 4, {1.0}, {0.0, 2.0}).pass);
  CHECK_THROWS_AS(check_complex_kernel_bound(o, 0.5, pi / 4, {1.0}, {0.0}), std::domain_error);
  CHECK_THROWS_AS(check_complex_kernel_bound(FractionalOrder(0.5, 2), 0.5, 0.1, {1.0}, {0.0}), std::domain_error);
}

TEST_CASE("whole-line limit of the Dirichlet semigroup") {
  // Far boundaries: the discrete kernel at the centre is close to, and below, the analytic one.
  const auto op = op_on(-8.0, 8.0, 512);
  const auto S = spectrum(op);
  const auto& x = op.grid().nodes;
  std::vector<double> f(512, 0.0);
  for (std::size_t i = 0; i < 512; ++i) f[i] = std::abs(x[i]) < 1.0 ? 1.0 : 0.0;
  const auto u = semigroup_apply(S, 0.1, f);
  const auto mass = kernel_cell_masses(0.1, op.order(), op.grid().h, 512);
  for (std::size_t i = 248; i < 264; ++i) {
    double analytic = 0.0;
    for (std::size_t j = 0; j < 512; ++j) analytic += mass[i > j ? i - j : j - i] * f[j];
    CHECK(u[i] / analytic >= 0.9);
    CHECK(u[i] / analytic <= 1.0);
  }
  CHECK(semigroup_apply(S, 0.0, f)[256] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("form criterion on nested grids") {
  const auto inner = op_on(-1.0, 1.0, 32);
  const auto outer = op_on(-2.0, 2.0, 64);
  auto r = check_form_criterion(inner, outer, 25, 1);
  CHECK(r.pass);
  CHECK(fitted(r, "max |b - a|") == 0.0);
  CHECK(fitted(r, "max K_inner - K_outer") <= 0.0);

  Matrix m = inner.matrix();
  for (std::size_t i = 0; i < 32; ++i) m(i, i) += 0.1;
  auto perturbed = check_form_criterion(DiscreteOperator(m, inner.grid(), inner.order()), outer, 25, 1);
  CHECK(perturbed.pass);
  CHECK(perturbed.criteria.front().value < 0.0);  // strict inequality

  CHECK_THROWS_AS(check_form_criterion(inner, op_on(-2.0, 2.0, 32), 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_form_criterion(inner, op_on(-2.0, 2.0, 64, 0.3), 5, 1), std::invalid_argument);
}

TEST_CASE("submarkovian forms") {
  for (double s : {0.2, 0.8}) {
    auto r = check_submarkovian_forms(op_on(0.0, 1.0, 48, s), 50, 9);
    CHECK(r.pass);
    CHECK(r.samples == 50);
  }
}

TEST_CASE("sector checks on a small grid") {
  const auto op = op_on(-1.0, 1.0, 48);
  const auto S = spectrum(op);
  const double l1 = S.eigenvalues[0];
  const double alpha = 0.99 * pi;
  auto res = check_resolvent_sector(S, {pi / 2, 2.0, alpha}, {l1 / 10, l1, l1 / std::abs(std::cos(alpha)), 100.0});
  CHECK(res.pass);
  // The bound 1/sin(alpha) is attained at r = lambda_1 / |cos alpha|.
  CHECK(res.criteria.back().value >= 0.99 / std::sin(alpha));
  CHECK_THROWS_AS(check_resolvent_sector(S, {pi}, {1.0}), std::domain_error);

  auto norm = check_sector_norm_Lp(S, op.order(), {0.0, 0.5, 0.9, 1.2}, {1e-2, 1e-1, 1.0}, 4);
  CHECK(norm.pass);
  CHECK(norm.refinement_trend.front() <= 1.0 + 1e-10);
  CHECK_THROWS_AS(check_sector_norm_Lp(S, op.order(), {pi / 2}, {1.0}, 4), std::domain_error);

  CHECK(check_holomorphy_axioms(S, op.grid(), 10, 4).pass);
  CHECK_THROWS_AS(check_holomorphy_axioms(S, Grid1D(-1.0, 1.0, 32), 1, 4), std::invalid_argument);

  CHECK(check_discrete_ultracontractivity(S, op.order(), {0.05, 0.5}).pass);
}

TEST_CASE("eigenvalue and Dirichlet problem checks") {
  const FractionalOrder o(0.5);
  auto eig = check_first_eigenvalue(-1.0, 1.0, 32, o, 1.1577738836977);
  CHECK(eig.pass);
  CHECK(fitted(eig, "lambda1_extrapolated") < std::sqrt(pi * pi / 4));
  CHECK_FALSE(check_first_eigenvalue(-1.0, 1.0, 32, o, 1.5).pass);

  auto torsion = check_exterior_dirichlet(-1.0, 1.0, 128, o, 2, 1.0);
  CHECK(torsion.pass);
  CHECK_FALSE(check_exterior_dirichlet(-1.0, 1.0, 128, o, 2, 1.2).pass);
}

TEST_CASE("laplacian limit and extension constants") {
  CHECK(check_laplacian_limit({0.9, 0.99}).pass);
  auto wrong_order = check_laplacian_limit({0.99, 0.9});
  CHECK_FALSE(wrong_order.pass);
  CHECK(wrong_order.max_violation > wrong_order.tolerance);

  const auto c = extend_estimate_constants(3.0, 0.5);
  CHECK(c.omega == doctest::Approx(std::log(3.0)));
  CHECK(extend_estimate_constants(1.0, 1.0).omega == 0.0);
  CHECK_THROWS_AS(extend_estimate_constants(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(extend_estimate_constants(2.0, 0.0), std::domain_error);
  for (double m : {1.0, 1.5, 10.0}) CHECK(check_extension_constants(m, 1.0).pass);
}
