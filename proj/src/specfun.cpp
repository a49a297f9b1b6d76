#include "fracsemi/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fracsemi/quadrature.hpp"

namespace fracsemi {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// log A(phi) for Kanter's representation of the one-sided stable density,
// A(phi) = [sin(s phi)^s sin((1-s) phi)^(1-s) / sin(phi)]^(1/(1-s)).
// `rest` = pi - phi is passed separately so that sin(phi) keeps full relative
// precision near both endpoints.
double kanter_log_a(double phi, double rest, double s) {
  const double one_minus = 1.0 - s;
  if (phi < 1e-7) {
    // Limit phi -> 0 plus the O(phi^2) term.
    const double base = s * std::log(s) + one_minus * std::log(one_minus);
    const double curvature =
        (1.0 - s * s * s - one_minus * one_minus * one_minus) * phi * phi / 6.0;
    return (base + curvature) / one_minus;
  }
  const double sin_phi = phi < rest ? std::sin(phi) : std::sin(rest);
  const double num = s * std::log(std::sin(s * phi)) + one_minus * std::log(std::sin(one_minus * phi));
  return (num - std::log(sin_phi)) / one_minus;
}

// Density of the one-sided stable law with Laplace transform exp(-lambda^s), s != 1/2.
double unit_stable_density(double s, double x) {
  const double one_minus = 1.0 - s;
  const double log_x = std::log(x);
  const double log_k = -s / one_minus * log_x;  // log of x^{-s/(1-s)}
  const double log_prefactor = -log_x / one_minus;
  auto term = [&](double phi, double rest) {
    const double log_a = kanter_log_a(phi, rest, s);
    const double a_k = std::exp(log_a + log_k);
    return std::exp(log_a - a_k + log_prefactor);
  };
  quad::Options opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-300;
  opt.initial_panels = 2;
  opt.max_evaluations = std::size_t{1} << 15;
  // Small x concentrates the mass near phi = 0, large x near phi = pi; each
  // half is integrated in the variable that vanishes at its own endpoint.
  const double half = 0.5 * kPi;
  const auto left = quad::integrate([&](double phi) { return term(phi, kPi - phi); }, 0.0, half, opt);
  const auto right = quad::integrate([&](double rest) { return term(kPi - rest, rest); }, 0.0, half, opt);
  return s / (one_minus * kPi) * (left.value + right.value);
}

}  // namespace

FractionalOrder::FractionalOrder(double s, int dimension) : s_(s), dimension_(dimension) {
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error("fractional order s must satisfy 0 < s < 1, got " + std::to_string(s));
  }
  if (dimension < 1 || dimension > 3) {
    throw std::domain_error("dimension N must be 1, 2 or 3, got " + std::to_string(dimension));
  }
}

double gamma_function(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_function: argument must be positive");
  if (x < 0.5) return gamma_function(x + 1.0) / x;
  const double y = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (y + static_cast<double>(i));
  const double t = y + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((y + 0.5) * std::log(t) - t) * series;
}

NormalizationConstant frac_constant(const FractionalOrder& order) {
  const double s = order.s();
  const double n = order.dimension();
  const double value = s * std::pow(4.0, s) * gamma_function((2.0 * s + n) / 2.0) /
                       (std::pow(kPi, n / 2.0) * gamma_function(1.0 - s));
  return {value, order};
}

double gaussian_kernel(double t, double r, int dimension) {
  if (!(t > 0.0)) throw std::domain_error("gaussian_kernel: time must be positive");
  return std::pow(4.0 * kPi * t, -0.5 * dimension) * std::exp(-r * r / (4.0 * t));
}

double stable_density(double t, double s, double tau) {
  if (!(t > 0.0)) throw std::domain_error("stable_density: t must be positive");
  if (!(tau > 0.0)) throw std::domain_error("stable_density: tau must be positive");
  if (!(s > 0.0 && s < 1.0)) throw std::domain_error("stable_density: s must lie in (0,1)");
  if (s == 0.5) {
    return t * std::pow(tau, -1.5) * std::exp(-t * t / (4.0 * tau)) / (2.0 * std::sqrt(kPi));
  }
  // f_{t,s}(tau) = t^{-1/s} f_{1,s}(tau t^{-1/s})
  const double scale = std::pow(t, -1.0 / s);
  return scale * unit_stable_density(s, tau * scale);
}

}  // namespace fracsemi
