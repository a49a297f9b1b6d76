#include "fracsemi/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracsemi/errors.hpp"
#include "fracsemi/quadrature.hpp"

namespace fracsemi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kBudget = std::size_t{1} << 20;

}  // namespace

KernelQuery::KernelQuery(std::complex<double> time, double distance, FractionalOrder ord)
    : z(time), r(distance), order(ord) {
  if (!(time.real() > 0.0)) throw std::domain_error("kernel query: Re z must be positive");
  if (!(distance >= 0.0)) throw std::domain_error("kernel query: distance must be non-negative");
}

double heat_kernel_subordinated(const KernelQuery& q) {
  if (q.z.imag() != 0.0) {
    throw std::domain_error("heat_kernel_subordinated: real time required");
  }
  const double t = q.z.real();
  const double s = q.order.s();
  const int dim = q.order.dimension();
  const double r = q.r;

  // Work in v = log tau. The stable density lives at tau ~ t^{1/s}; the Gaussian
  // factor shifts the mass to tau ~ r^2 when r is large.
  const double v_star = std::log(t) / s;
  const double v_far = r > 0.0 ? std::max(v_star, 2.0 * std::log(r)) : v_star;
  // f_{1,s}(x) ~ exp(-(1-s) s^{s/(1-s)} x^{-s/(1-s)}) as x -> 0; start where that is e^{-700}.
  const double decay_coeff = (1.0 - s) * std::pow(s, s / (1.0 - s));
  const double v_lo = v_star + (1.0 - s) / s * std::log(decay_coeff / 700.0);

  auto integrand = [&](double v) {
    const double tau = std::exp(v);
    return stable_density(t, s, tau) * gaussian_kernel(tau, r, dim) * tau;
  };

  // Right tail: f_{t,s}(tau) ~ s t tau^{-1-s} / Gamma(1-s) and K_G ~ (4 pi tau)^{-N/2}.
  const double tail_rate = s + 0.5 * dim;
  const double tail_coeff = s * t / gamma_function(1.0 - s) * std::pow(4.0 * kPi, -0.5 * dim);
  auto tail_closure = [&](double v_hi) { return tail_coeff * std::exp(-tail_rate * v_hi) / tail_rate; };

  quad::Options opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 0.0;
  opt.max_evaluations = kBudget;

  double v_hi = v_far + 6.0;
  opt.initial_panels = static_cast<int>(std::ceil(v_hi - v_lo));
  auto body = quad::integrate(integrand, v_lo, v_hi, opt);
  double value = body.value;
  std::size_t used = body.evaluations;
  // Extend until the asymptotic remainder is negligible against the body.
  while (tail_closure(v_hi) > 1e-9 * std::abs(value)) {
    const double next = v_hi + 8.0;
    quad::Options ext = opt;
    ext.max_evaluations = kBudget > used ? kBudget - used : 0;
    ext.initial_panels = 8;
    ext.abs_tol = 1e-11 * std::abs(value);
    auto piece = quad::integrate(integrand, v_hi, next, ext);
    value += piece.value;
    used += piece.evaluations;
    v_hi = next;
  }
  return value + tail_closure(v_hi);
}

std::complex<double> heat_kernel_fourier(const KernelQuery& q) {
  if (q.order.dimension() != 1) {
    throw std::domain_error("heat_kernel_fourier: only N = 1 is supported");
  }
  const double s = q.order.s();
  const double two_s = 2.0 * s;
  const double r = q.r;
  const std::complex<double> z = q.z;
  const double re = z.real();
  const double im = z.imag();

  auto integrand = [&](double rho) -> std::complex<double> {
    const double p = std::pow(rho, two_s);
    const double envelope = std::exp(-re * p);
    const double c = std::cos(r * rho);
    return {envelope * std::cos(im * p) * c, -envelope * std::sin(im * p) * c};
  };

  // Truncate where the envelope's tail mass, relative to its total mass, drops
  // below 1e-16. With x = Re z rho^{2s} that tail is the regularized upper
  // incomplete gamma Q(1/2s, x) ~ x^{1/2s - 1} e^{-x} / Gamma(1/2s).
  const double alpha = 1.0 / two_s;
  double x_max = 36.8;
  if (alpha > 1.0) {
    for (int it = 0; it < 50; ++it) {
      x_max = std::max(36.8, 36.8 + (alpha - 1.0) * std::log(x_max) - std::lgamma(alpha));
    }
  }
  const double rho_max = std::pow(x_max / re, alpha);
  auto local_frequency = [&](double rho) {
    return r + std::abs(im) * two_s * std::pow(std::max(rho, 1.0), two_s - 1.0);
  };

  // Scales of the envelope: its L1 mass, and the radius where it starts to decay.
  const double envelope_mass = std::exp(std::lgamma(1.0 + alpha)) * std::pow(re, -alpha);
  const double rho_scale = std::pow(re, -alpha);
  const double rho_tiny = rho_scale * std::ldexp(1.0, -40);

  const auto& gl20 = quad::gauss_legendre(20);
  std::complex<double> total{};
  std::size_t used = 0;
  double lo = 0.0;
  while (lo < rho_max) {
    // Panel width: resolve the oscillation, grow geometrically away from the
    // origin, and keep the envelope's exponent from changing by more than ~4.
    double width = std::max(lo, rho_tiny);
    const double freq = local_frequency(lo);
    if (freq > 0.0) width = std::min(width, kPi / std::max(freq, 1.0));
    if (lo > 0.0) {
      const double exponent = re * std::pow(lo, two_s);
      width = std::min(width, 4.0 * lo / (two_s * std::max(exponent, 1.0)));
    }
    const double hi = std::min(lo + width, rho_max);
    quad::Result<std::complex<double>> piece;
    if (lo >= 1.0) {
      // Smooth on this scale; a fixed 20-point rule is accurate to rounding.
      piece.value = quad::fixed_gauss_legendre(integrand, lo, hi, gl20);
      piece.evaluations = 20;
    } else {
      // rho^{2s} is not smooth at the origin; refine adaptively there.
      quad::Options opt;
      opt.rel_tol = 1e-13;
      opt.abs_tol = 1e-16 * envelope_mass;
      opt.max_evaluations = kBudget > used ? kBudget - used : 0;
      piece = quad::integrate(integrand, lo, hi, opt);
    }
    if (used + piece.evaluations > kBudget) {
      throw QuadratureError("heat_kernel_fourier: evaluation budget of 2^20 exhausted");
    }
    total += piece.value;
    used += piece.evaluations;
    lo = hi;
  }
  return total / kPi;
}

double poisson_kernel_closed(double t, double r, int dimension) {
  if (!(t > 0.0)) throw std::domain_error("poisson_kernel_closed: time must be positive");
  const double m = 0.5 * (dimension + 1);
  return gamma_function(m) * std::pow(kPi, -m) * t / std::pow(t * t + r * r, m);
}

RescaledQuery self_similar_rescale(const KernelQuery& q, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("self_similar_rescale: sigma must be positive");
  if (q.z.imag() != 0.0) throw std::domain_error("self_similar_rescale: real time required");
  const double s = q.order.s();
  KernelQuery scaled(q.z * sigma, q.r * std::pow(sigma, 1.0 / (2.0 * s)), q.order);
  return {scaled, std::pow(sigma, -q.order.decay_exponent())};
}

std::vector<double> kernel_cell_masses(double t, const FractionalOrder& order, double h, std::size_t count) {
  if (order.dimension() != 1) throw std::domain_error("kernel_cell_masses: only N = 1 is supported");
  if (!(t > 0.0) || !(h > 0.0)) throw std::domain_error("kernel_cell_masses: t and h must be positive");
  const double s = order.s();
  std::vector<double> mass(count, 0.0);
  auto edge = [&](std::size_t d, double sign) { return (static_cast<double>(d) + sign * 0.5) * h; };

  if (s == 0.5) {
    for (std::size_t d = 0; d < count; ++d) {
      mass[d] = d == 0 ? 2.0 / kPi * std::atan(0.5 * h / t)
                       : (std::atan(edge(d, 1.0) / t) - std::atan(edge(d, -1.0) / t)) / kPi;
    }
    return mass;
  }

  // Subordination: the Gaussian mass of a cell is a difference of error functions,
  // so one tau-quadrature of the stable density serves every cell.
  const double v_star = std::log(t) / s;
  const double decay_coeff = (1.0 - s) * std::pow(s, s / (1.0 - s));
  const double v_lo = v_star + (1.0 - s) / s * std::log(decay_coeff / 700.0);
  const double reach = static_cast<double>(count) * h;
  // Past tau ~ reach^2 every cell mass decays like tau^{-1/2}, the density like tau^{-1-s}.
  const double v_hi = std::max(v_star, 2.0 * std::log(reach)) + 40.0 / (s + 0.5);
  const double width = std::min(1.0, 2.0 * (1.0 - s) / s);
  const auto& rule = quad::gauss_legendre(20);

  for (double a = v_lo; a < v_hi; a += width) {
    const double b = std::min(a + width, v_hi);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double v = mid + half * rule.nodes[k];
      const double tau = std::exp(v);
      const double weight = half * rule.weights[k] * stable_density(t, s, tau) * tau;
      if (weight == 0.0) continue;
      const double scale = 1.0 / (2.0 * std::sqrt(tau));
      double lower = std::erf(0.5 * h * scale);
      mass[0] += weight * lower;
      for (std::size_t d = 1; d < count; ++d) {
        const double upper = std::erf(edge(d, 1.0) * scale);
        mass[d] += weight * 0.5 * (upper - lower);
        lower = upper;
      }
    }
  }
  return mass;
}

}  // namespace fracsemi
