#pragma once

namespace fracsemi {

/// Exponent s in (0,1) together with the spatial dimension N in {1,2,3}.
class FractionalOrder {
 public:
  /// Throws std::domain_error unless 0 < s < 1 and 1 <= dimension <= 3.
  explicit FractionalOrder(double s, int dimension = 1);

  double s() const { return s_; }
  int dimension() const { return dimension_; }

  /// N / (2s), the exponent of the on-diagonal heat kernel decay.
  double decay_exponent() const { return dimension_ / (2.0 * s_); }

  friend bool operator==(const FractionalOrder&, const FractionalOrder&) = default;

 private:
  double s_;
  int dimension_;
};

struct NormalizationConstant {
  double value;
  FractionalOrder order;
};

/// Gamma function for x > 0 (Lanczos, g = 7, nine coefficients).
/// Throws std::domain_error for x <= 0.
double gamma_function(double x);

/// C_{N,s} = s 4^s Gamma((2s+N)/2) / (pi^{N/2} Gamma(1-s)).
NormalizationConstant frac_constant(const FractionalOrder& order);

/// Gauss-Weierstrass kernel (4 pi t)^{-N/2} exp(-r^2 / (4t)).
double gaussian_kernel(double t, double r, int dimension);

/// Density of the one-sided s-stable law with Laplace transform exp(-t lambda^s),
/// evaluated at tau. Closed form at s = 1/2; Kanter's positive integral otherwise.
double stable_density(double t, double s, double tau);

}  // namespace fracsemi
