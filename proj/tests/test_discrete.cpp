#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fracsemi/discrete.hpp"
#include "fracsemi/errors.hpp"

using namespace fracsemi;
using std::numbers::pi;

namespace {

DiscreteOperator op_on(double a, double b, std::size_t n, double s) {
  return assemble_dirichlet(Grid1D(a, b, n), FractionalOrder(s));
}

std::vector<double> random_vector(std::size_t n, std::mt19937_64& gen, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(gen);
  return v;
}

}  // namespace

TEST_CASE("grid construction and nesting") {
  const Grid1D g(-1.0, 1.0, 16);
  CHECK(g.h == 0.125);
  CHECK(g.nodes.front() == doctest::Approx(-0.9375));
  CHECK(g.nodes.back() == doctest::Approx(0.9375));
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 7), std::domain_error);
  CHECK_THROWS_AS(Grid1D(1.0, 1.0, 16), std::domain_error);

  CHECK(nested_offset(g, Grid1D(-2.0, 2.0, 32)) == 8);
  CHECK(nested_offset(g, g) == 0);
  CHECK_THROWS_AS(nested_offset(g, Grid1D(-2.0, 2.0, 16)), std::invalid_argument);           // different h
  CHECK_THROWS_AS(nested_offset(g, Grid1D(-2.0625, 1.9375, 32)), std::invalid_argument);     // shifted by h/2
  CHECK_THROWS_AS(nested_offset(Grid1D(-2.0, 2.0, 32), g), std::invalid_argument);           // not contained
}

TEST_CASE("killing mass and near-field moment") {
  const Grid1D g(0.0, 1.0, 10);
  CHECK(killing_mass(g, 0, 0.5) == doctest::Approx((std::pow(0.05, -1.0) + std::pow(0.95, -1.0)) / 1.0));
  CHECK(near_field_moment(0.5) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(near_field_moment(0.25) == doctest::Approx(-0.4792561227).epsilon(1e-9));
}

TEST_CASE("assembled operator is a symmetric M-matrix") {
  for (double s : {0.1, 0.5, 0.9}) {
    const auto op = op_on(-1.0, 1.0, 64, s);
    const auto& a = op.matrix();
    CHECK(a.asymmetry() == 0.0);
    for (std::size_t i = 0; i < op.size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < op.size(); ++j) {
        if (i != j) CHECK(a(i, j) < 0.0);
        row += a(i, j);
      }
      CHECK(row > 0.0);
    }
  }
  CHECK_THROWS_AS(assemble_dirichlet(Grid1D(0.0, 1.0, 16), FractionalOrder(0.5, 2)), std::domain_error);
}

TEST_CASE("constants feel only the exterior") {
  // At the centre of (-1, 1), s = 1/2: C_{1,1/2} kappa = (1/pi) * 2 = 2/pi.
  const auto op = op_on(-1.0, 1.0, 512, 0.5);
  const auto row = op.matrix().apply(std::vector<double>(512, 1.0));
  CHECK(0.5 * (row[255] + row[256]) == doctest::Approx(2.0 / pi).epsilon(2e-3));
  const std::vector<double> zero(512, 0.0);
  CHECK(form_apply(op, zero, zero) == 0.0);
}

TEST_CASE("assembly: translation invariance and scaling") {
  for (double s : {0.3, 0.7}) {
    const auto base = op_on(-1.0, 1.0, 32, s);
    const auto shifted = op_on(3.0, 5.0, 32, s);
    const auto wide = op_on(-4.0, 4.0, 32, s);
    for (std::size_t i = 0; i < 32; ++i)
      for (std::size_t j = 0; j < 32; ++j) {
        CHECK(shifted.matrix()(i, j) == doctest::Approx(base.matrix()(i, j)).epsilon(1e-13));
        CHECK(wide.matrix()(i, j) == doctest::Approx(std::pow(4.0, -2 * s) * base.matrix()(i, j)).epsilon(1e-12));
      }
  }
}

TEST_CASE("Jacobi eigendecomposition") {
  const auto op = op_on(-1.0, 1.0, 48, 0.4);
  const auto S = spectrum(op);
  REQUIRE(S.size() == 48);
  CHECK(std::is_sorted(S.eigenvalues.begin(), S.eigenvalues.end()));
  const double scale = S.eigenvalues.back();
  for (std::size_t k = 0; k < S.size(); ++k) {
    const auto q = S.eigenvector(k);
    const auto aq = op.matrix().apply(q);
    double residual = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) residual = std::max(residual, std::abs(aq[i] - S.eigenvalues[k] * q[i]));
    CHECK(residual <= 1e-11 * scale);
    for (std::size_t l = k; l < std::min(S.size(), k + 3); ++l)
      CHECK(dot(q, S.eigenvector(l)) == doctest::Approx(k == l ? 1.0 : 0.0).epsilon(1e-12));
  }
  const auto first = spectrum(op, 3);
  REQUIRE(first.size() == 3);
  CHECK(first.eigenvalues[2] == S.eigenvalues[2]);
}

TEST_CASE("first eigenvalue: refinement and comparison with the spectral value") {
  const double oracle = 1.1577738836977;  // s = 1/2 on (-1, 1)
  double prev = 0.0;
  for (std::size_t n : {32, 64, 128}) {
    const double l1 = spectrum(op_on(-1.0, 1.0, n, 0.5), 1).eigenvalues[0];
    CHECK(l1 > prev);
    CHECK(l1 < oracle);
    prev = l1;
  }
  CHECK(prev == doctest::Approx(oracle).epsilon(5e-3));
  for (double s : {0.2, 0.5, 0.8})
    CHECK(spectrum(op_on(-1.0, 1.0, 64, s), 1).eigenvalues[0] < std::pow(pi * pi / 4, s));
}

TEST_CASE("semigroup: positivity, contraction, semigroup law") {
  const auto S = spectrum(op_on(0.0, 1.0, 40, 0.6));
  const auto e1 = semigroup_matrix(S, 0.01), e2 = semigroup_matrix(S, 0.02), e3 = semigroup_matrix(S, 0.03);
  const auto prod = e1 * e2;
  for (std::size_t i = 0; i < 40; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < 40; ++j) {
      CHECK(e1(i, j) > 0.0);
      row += e1(i, j);
      CHECK(prod(i, j) == doctest::Approx(e3(i, j)).epsilon(1e-11));
    }
    CHECK(row < 1.0);
  }
  const auto k = kernel_matrix(S, 0.01);
  CHECK(k(3, 5) == doctest::Approx(e1(3, 5) / S.h));
  CHECK(k.asymmetry() <= 1e-14);

  std::mt19937_64 gen(5);
  const auto f = random_vector(40, gen);
  const auto real = semigroup_apply(S, 0.02, f);
  const auto cplx = semigroup_apply(S, std::complex<double>(0.02, 0.0), f);
  for (std::size_t i = 0; i < 40; ++i) CHECK(cplx[i].real() == doctest::Approx(real[i]).epsilon(1e-13));
  const auto kz = kernel_matrix(S, std::complex<double>(0.01, 0.02));
  CHECK(kz.rows() == 40);
}

TEST_CASE("resolvent norm") {
  const auto S = spectrum(op_on(-1.0, 1.0, 32, 0.5));
  const double l1 = S.eigenvalues[0];
  CHECK(resolvent_norm(S, 1.0) == doctest::Approx(1.0 / (1.0 + l1)));
  CHECK(resolvent_norm(S, std::complex<double>(-l1, 2.0)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(resolvent_norm(S, -l1), std::domain_error);
}

TEST_CASE("exterior Dirichlet solve") {
  const auto op = op_on(-1.0, 1.0, 256, 0.5);
  const std::vector<double> one(256, 1.0);
  const auto sol = solve_exterior_dirichlet(op, 0.0, one);
  CHECK(sol.relative_residual <= 1e-10);
  CHECK(*std::min_element(sol.u.begin(), sol.u.end()) > 0.0);
  // Torsion at s = 1/2: u(x) = sqrt(1 - x^2).
  CHECK(0.5 * (sol.u[127] + sol.u[128]) == doctest::Approx(1.0).epsilon(5e-3));
  CHECK(sol.u[64] == doctest::Approx(std::sqrt(1 - std::pow(op.grid().nodes[64], 2))).epsilon(1e-2));

  std::mt19937_64 gen(11);
  const auto f = random_vector(256, gen, 0.0, 1.0);
  const auto damped = solve_exterior_dirichlet(op, 1.0, f);
  const auto au = op.matrix().apply(damped.u);
  for (std::size_t i = 0; i < 256; ++i) CHECK(au[i] + damped.u[i] == doctest::Approx(f[i]).epsilon(1e-8));
  // Maximum principle.
  CHECK(*std::max_element(damped.u.begin(), damped.u.end()) <= *std::max_element(f.begin(), f.end()));
  CHECK_THROWS_AS(solve_exterior_dirichlet(op, 0.0, std::vector<double>(10, 1.0)), std::invalid_argument);
}

TEST_CASE("form and perturbed operators") {
  const auto op = op_on(-1.0, 1.0, 32, 0.5);
  std::mt19937_64 gen(3);
  const auto u = random_vector(32, gen), v = random_vector(32, gen);
  CHECK(form_apply(op, u, v) == doctest::Approx(form_apply(op, v, u)).epsilon(1e-13));
  CHECK(form_apply(op, u, u) > 0.0);
  Matrix m = op.matrix();
  for (std::size_t i = 0; i < 32; ++i) m(i, i) += 0.1;
  const DiscreteOperator bumped(m, op.grid(), op.order());
  CHECK(form_apply(bumped, u, u) == doctest::Approx(form_apply(op, u, u) + 0.1 * dot(u, u) * op.grid().h));
  CHECK_THROWS_AS(DiscreteOperator(Matrix(3, 3), op.grid(), op.order()), std::invalid_argument);
}
