#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fracsemi/specfun.hpp"

namespace fracsemi {

/// A point (z, r) at which to evaluate the translation-invariant heat kernel P_s(z, |x-y|).
/// Real-time queries carry a zero imaginary part.
struct KernelQuery {
  std::complex<double> z;
  double r;
  FractionalOrder order;

  /// Throws std::domain_error unless Re z > 0 and r >= 0.
  KernelQuery(std::complex<double> time, double distance, FractionalOrder ord);
};

/// P_s(t, r) = int_0^inf f_{t,s}(tau) K_G(tau, r) dtau, for real t > 0 and N in {1,2,3}.
/// The tau integral runs in log variables around the saddle scale t^{1/s};
/// throws QuadratureError if the 2^20 evaluation budget is exhausted.
double heat_kernel_subordinated(const KernelQuery& q);

/// P_s(z, r) = (1/pi) int_0^inf exp(-z rho^{2s}) cos(r rho) drho, N = 1, Re z > 0.
std::complex<double> heat_kernel_fourier(const KernelQuery& q);

/// Closed form at s = 1/2: Gamma((N+1)/2) pi^{-(N+1)/2} t / (t^2 + r^2)^{(N+1)/2}.
double poisson_kernel_closed(double t, double r, int dimension);

/// Cell masses m_d = int_{(d-1/2)h}^{(d+1/2)h} P_s(t, |y|) dy for d = 1..count-1 and
/// m_0 = int_{-h/2}^{h/2} P_s(t, |y|) dy (N = 1): the full-space semigroup acting on
/// piecewise-constant data on a uniform grid. Closed form at s = 1/2.
std::vector<double> kernel_cell_masses(double t, const FractionalOrder& order, double h, std::size_t count);

struct RescaledQuery {
  KernelQuery query;
  /// P_s(sigma t, sigma^{1/2s} r) = factor * P_s(t, r), factor = sigma^{-N/2s}.
  double factor;
};

/// Exact parabolic self-similarity of the fractional heat kernel.
RescaledQuery self_similar_rescale(const KernelQuery& q, double sigma);

}  // namespace fracsemi
