#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "fracsemi/errors.hpp"

namespace fracsemi::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule with `points` nodes (Newton iteration on P_n); thread-safe.
const GaussLegendreRule& gauss_legendre(int points);

/// Integrates f over [a, b] with a fixed Gauss-Legendre rule.
template <class F>
auto fixed_gauss_legendre(F&& f, double a, double b, const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  using R = decltype(f(mid));
  R sum{};
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return sum * half;
}

struct Options {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  /// Hard cap on integrand evaluations; exceeding it throws QuadratureError.
  std::size_t max_evaluations = std::size_t{1} << 20;
  /// Initial uniform split of [a, b] before adaptive bisection.
  int initial_panels = 1;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

// Kronrod 15-point abscissae (positive half) and weights; Gauss 7-point weights.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Segment {
  double a;
  double b;
  T value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
auto gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  using T = decltype(f(center));
  const T fc = f(center);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    const T pair = f1 + f2;
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const T value = kronrod * half;
  const double error = magnitude((kronrod - gauss) * half);
  return Segment<T>{a, b, value, error};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// f may return double or std::complex<double>.
template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {}) {
  using T = decltype(f(a));
  using Seg = detail::Segment<T>;
  Result<T> result;
  if (a == b) return result;

  std::priority_queue<Seg> queue;
  T total{};
  double total_error = 0.0;
  const int panels = opt.initial_panels > 0 ? opt.initial_panels : 1;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + (b - a) * p / panels;
    const double hi = (p + 1 == panels) ? b : a + (b - a) * (p + 1) / panels;
    Seg seg = detail::gauss_kronrod_15(f, lo, hi);
    result.evaluations += 15;
    total += seg.value;
    total_error += seg.error;
    queue.push(seg);
  }

  while (true) {
    const double target = std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total));
    if (total_error <= target) break;
    if (result.evaluations + 30 > opt.max_evaluations) {
      std::ostringstream msg;
      msg << "adaptive quadrature exhausted its budget of " << opt.max_evaluations
          << " evaluations on [" << a << ", " << b << "] (error estimate " << total_error
          << ", target " << target << ")";
      throw QuadratureError(msg.str());
    }
    Seg worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further in double precision; accept it.
      total_error -= worst.error;
      worst.error = 0.0;
      queue.push(worst);
      if (total_error <= 0.0) break;
      continue;
    }
    Seg left = detail::gauss_kronrod_15(f, worst.a, mid);
    Seg right = detail::gauss_kronrod_15(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum from the leaves to shed the drift of incremental updates.
  T resummed{};
  double err = 0.0;
  while (!queue.empty()) {
    resummed += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  result.value = resummed;
  result.error = err;
  return result;
}

}  // namespace fracsemi::quad
