#include "fracsemi/fraclap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fracsemi/errors.hpp"
#include "fracsemi/quadrature.hpp"
#include "fracsemi/specfun.hpp"

namespace fracsemi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFarRadius = 50.0;

const quad::GaussLegendreRule& rule20() { return quad::gauss_legendre(20); }

void require_membership(const ScalarField1D& u, double s, const char* who) {
  if (!(u.decay.exponent > -2.0 * s)) {
    std::ostringstream msg;
    msg << who << ": decay exponent " << u.decay.exponent << " does not exceed -2s = " << -2.0 * s
        << ", so u is not in L^1_s";
    throw MembershipError(msg.str());
  }
}

// Second symmetric difference g(rho) = 2u(x) - u(x+rho) - u(x-rho).
struct PairIntegrand {
  const ScalarField1D& u;
  double x;
  double ux;
  double s;

  double g(double rho) const { return 2.0 * ux - u(x + rho) - u(x - rho); }

  // int_a^b g(rho) rho^{-1-2s} drho, one 20-point panel.
  double panel(double a, double b) const {
    return quad::fixed_gauss_legendre([&](double rho) { return g(rho) * std::pow(rho, -1.0 - 2.0 * s); },
                                      a, b, rule20());
  }

  // int_{from}^inf g(rho) rho^{-1-2s} drho for from >= 1.
  double outer(double from) const {
    double acc = 0.0;
    const double mid_end = std::max(from, kFarRadius);
    for (double a = from; a < mid_end; a += 1.0) acc += panel(a, std::min(a + 1.0, mid_end));
    // rho = q^{-1/2s}: int_R^inf g rho^{-1-2s} drho = (1/2s) int_0^{R^{-2s}} g(rho(q)) dq,
    // on panels halving toward q = 0.
    const double two_s = 2.0 * s;
    const double q_top = std::pow(mid_end, -two_s);
    const int halvings = std::clamp(static_cast<int>(two_s * std::log2(1e150 / mid_end)), 1, 60);
    double q_hi = q_top;
    for (int j = 0; j < halvings; ++j) {
      const double q_lo = 0.5 * q_hi;
      acc += quad::fixed_gauss_legendre([&](double q) { return g(std::pow(q, -1.0 / two_s)); }, q_lo, q_hi,
                                        rule20()) / two_s;
      q_hi = q_lo;
    }
    // Beyond the last panel u(x +- rho) is negligible against the decay bound, so g ~ 2u(x).
    acc += 2.0 * ux * q_hi / two_s;
    return acc;
  }

  // int_eps^1 on octave panels [eps 2^j, eps 2^{j+1}].
  double near(double eps) const {
    double acc = 0.0;
    for (double a = eps; a < 1.0; a *= 2.0) acc += panel(a, std::min(2.0 * a, 1.0));
    return acc;
  }
};

double second_difference(const ScalarField1D& u, double x, double step) {
  return (u(x + step) - 2.0 * u(x) + u(x - step)) / (step * step);
}

}  // namespace

double truncated_flap(const ScalarField1D& u, double x, double eps, double s) {
  const FractionalOrder order(s);
  if (!(eps > 0.0)) throw std::domain_error("truncated_flap: eps must be positive");
  require_membership(u, s, "truncated_flap");
  const PairIntegrand pi{u, x, u(x), s};
  const double integral = eps < 1.0 ? pi.near(eps) + pi.outer(1.0) : pi.outer(eps);
  return frac_constant(order).value * integral;
}

double principal_value_flap(const ScalarField1D& u, double x, double s, const PrincipalValueOptions& options) {
  const FractionalOrder order(s);
  if (u.smoothness != Smoothness::c2_near_target) {
    throw std::invalid_argument("principal_value_flap: needs a field that is C^2 near the target point");
  }
  if (!(options.eps0 > 0.0 && options.eps0 <= 1.0)) {
    throw std::domain_error("principal_value_flap: eps0 must lie in (0, 1]");
  }
  require_membership(u, s, "principal_value_flap");
  const double c = frac_constant(order).value;
  const PairIntegrand pi{u, x, u(x), s};
  const double two_s = 2.0 * s;
  // The eps-expansion of the corrected value has powers eps^{4-2s}, eps^{6-2s}, ...;
  // eliminate the first two by a Richardson table.
  const double r1 = std::pow(2.0, 4.0 - two_s) - 1.0;
  const double r2 = std::pow(2.0, 6.0 - two_s) - 1.0;

  // Each halving of eps adds one octave panel to the near field.
  double eps = options.eps0;
  double integral = pi.near(eps) + pi.outer(1.0);
  auto corrected = [&] {
    const double u2 = second_difference(u, x, 0.25 * eps);
    return c * (integral - u2 * std::pow(eps, 2.0 - two_s) / (2.0 - two_s));
  };
  const double nan = std::numeric_limits<double>::quiet_NaN();
  double prev = corrected();
  double prev_r1 = nan, prev_r2 = nan, prev_step = nan, ratio = nan;
  const int levels = options.fixed_halvings > 0 ? std::max(options.fixed_halvings, 2) : options.max_halvings;
  for (int k = 1; k <= levels; ++k) {
    const double next_eps = 0.5 * eps;
    integral += pi.panel(next_eps, eps);
    eps = next_eps;
    const double value = corrected();
    const double step = value - prev;
    if (!std::isnan(prev_step) && prev_step != 0.0) ratio = std::abs(step / prev_step);
    const double e1 = value + step / r1;
    const double e2 = std::isnan(prev_r1) ? nan : e1 + (e1 - prev_r1) / r2;
    if (options.fixed_halvings > 0) {
      if (k == levels) return e2;
    } else if (k >= 3 && std::abs(e2 - prev_r2) <= options.tol * std::max(1.0, std::abs(e2))) {
      return e2;
    }
    prev = value;
    prev_r1 = e1;
    prev_r2 = e2;
    prev_step = step;
  }
  std::ostringstream msg;
  msg << "principal_value_flap: no convergence after " << options.max_halvings
      << " eps-halvings (observed contraction ratio " << ratio << ", expected about "
      << std::pow(2.0, two_s - 4.0) << ")";
  throw ConvergenceError(msg.str());
}

namespace {

// G(t)u(x) - u(x) for the Gauss-Weierstrass semigroup.
double heat_increment(const ScalarField1D& u, double x, double ux, double t) {
  auto mean = [&](double rho) { return 0.5 * (u(x + rho) + u(x - rho)); };
  const double root = std::sqrt(t);
  if (t <= 0.25) {
    // rho = 2 sqrt(t) w: (2/sqrt(pi)) int_0^inf e^{-w^2} (mean - u(x)) dw; e^{-w^2} < 1e-18 past 6.5.
    double acc = 0.0;
    for (double a = 0.0; a < 6.5; a += 0.5) {
      acc += quad::fixed_gauss_legendre(
          [&](double w) { return std::exp(-w * w) * (mean(2.0 * root * w) - ux); }, a, a + 0.5, rule20());
    }
    return 2.0 / std::sqrt(kPi) * acc;
  }
  // Wide kernel: integrate 2 K(t, rho) mean(rho) in rho and subtract u(x) exactly
  // (2 int_0^inf K = 1). Panels resolve u on the unit scale near x, then grow.
  const double reach = 13.0 * root;
  const double local = std::abs(x) + 8.0;
  const double norm = 1.0 / std::sqrt(kPi * t);
  double acc = 0.0;
  double a = 0.0;
  while (a < reach) {
    const double width = std::min(a < local ? 1.0 : 0.25 * a, root);
    const double b = std::min(a + width, reach);
    acc += quad::fixed_gauss_legendre([&](double rho) { return std::exp(-rho * rho / (4.0 * t)) * mean(rho); },
                                      a, b, rule20());
    a = b;
  }
  return norm * acc - ux;
}

}  // namespace

double balakrishnan_flap(const ScalarField1D& u, double x, double s) {
  const FractionalOrder order(s);
  require_membership(u, s, "balakrishnan_flap");
  const double ux = u(x);
  constexpr double t0 = 1e-4;
  constexpr double t_max = 1e6;

  // Short times: G(t)u - u = t u'' + t^2 u''''/2 + O(t^3).
  const double d = 1e-2;
  const double u2 = second_difference(u, x, 1e-3);
  const double u4 = (u(x + 2 * d) - 4 * u(x + d) + 6 * ux - 4 * u(x - d) + u(x - 2 * d)) / std::pow(d, 4);
  double acc = u2 * std::pow(t0, 1.0 - s) / (1.0 - s) + 0.5 * u4 * std::pow(t0, 2.0 - s) / (2.0 - s);

  // Octave panels in t.
  for (double a = t0; a < t_max; a *= 2.0) {
    const double b = std::min(2.0 * a, t_max);
    acc += quad::fixed_gauss_legendre(
        [&](double t) { return heat_increment(u, x, ux, t) * std::pow(t, -1.0 - s); }, a, b, rule20());
  }
  // Beyond t_max: the -u(x) part exactly; G(t)u(x) decays like t^{-q/2}, q = min(p, 1) clipped at 0.
  const double q = std::clamp(u.decay.exponent, 0.0, 1.0);
  const double g_tail = heat_increment(u, x, ux, t_max) + ux;
  acc += -ux * std::pow(t_max, -s) / s + g_tail * std::pow(t_max, -s) / (s + 0.5 * q);

  const double gamma_minus_s = -gamma_function(1.0 - s) / s;
  return acc / gamma_minus_s;
}

Membership membership_L1s(const ScalarField1D& u, double s) {
  const FractionalOrder order(s);
  if (!(u.decay.exponent > -2.0 * s)) return {false, std::numeric_limits<double>::infinity()};
  const double two_s = 2.0 * s;
  double total = 0.0;
  for (double side : {1.0, -1.0}) {
    // x = side (q^{-1/2s} - 1): int_0^inf |u|(1+x)^{-1-2s} dx = (1/2s) int_0^1 |u(x(q))| dq.
    auto f = [&](double q) { return std::abs(u(side * (std::pow(q, -1.0 / two_s) - 1.0))); };
    const int halvings = std::clamp(static_cast<int>(two_s * std::log2(1e150)), 1, 200);
    double q_hi = 1.0;
    double acc = 0.0;
    for (int j = 0; j < halvings; ++j) {
      const double q_lo = 0.5 * q_hi;
      acc += quad::fixed_gauss_legendre(f, q_lo, q_hi, rule20());
      q_hi = q_lo;
    }
    acc += f(0.5 * q_hi) * q_hi;  // remainder, integrand frozen at the last node
    total += acc / two_s;
  }
  return {true, total};
}

std::vector<ConvergenceRow> convergence_to_laplacian(const ScalarField1D& u, const ScalarField1D& v,
                                                     const std::vector<double>& s_list) {
  const auto& rule = quad::gauss_legendre(10);
  std::vector<double> nodes, weights;
  for (int panel = -10; panel < 10; ++panel) {
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      nodes.push_back(panel + 0.5 + 0.5 * rule.nodes[k]);
      weights.push_back(0.5 * rule.weights[k]);
    }
  }
  const double h = 1e-3;
  auto derivative = [&](const ScalarField1D& f, double x) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
  };
  double rhs = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) rhs += weights[i] * derivative(u, nodes[i]) * derivative(v, nodes[i]);

  std::vector<ConvergenceRow> rows;
  for (double s : s_list) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double vx = v(nodes[i]);
      if (vx == 0.0) continue;
      lhs += weights[i] * vx * principal_value_flap(u, nodes[i], s);
    }
    rows.push_back({s, lhs, rhs, std::abs(lhs - rhs)});
  }
  return rows;
}

}  // namespace fracsemi
