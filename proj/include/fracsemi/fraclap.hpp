#pragma once

#include <functional>
#include <vector>

namespace fracsemi {

/// Declared envelope |u(x)| <= constant * (1 + |x|)^{-exponent}. A negative
/// exponent describes growth.
struct DecayBound {
  double constant = 1.0;
  double exponent = 0.0;
};

enum class Smoothness { c2_near_target, rough };

struct ScalarField1D {
  std::function<double(double)> evaluator;
  DecayBound decay;
  Smoothness smoothness = Smoothness::c2_near_target;

  double operator()(double x) const { return evaluator(x); }
};

/// C_{1,s} int_{|x-y|>eps} (u(x) - u(y)) |x-y|^{-1-2s} dy on fixed composite
/// Gauss-Legendre nodes: octave panels on [eps, 1], unit panels on [1, 50], and
/// the tail beyond 50 in the variable q = rho^{-2s}.
/// Throws MembershipError if the decay bound does not place u in L^1_s.
double truncated_flap(const ScalarField1D& u, double x, double eps, double s);

struct PrincipalValueOptions {
  double tol = 1e-9;        // relative (absolute below magnitude 1)
  double eps0 = 0.125;      // first truncation radius
  int max_halvings = 20;
  /// When positive, perform exactly this many halvings and skip the stopping test,
  /// so that the result is a fixed linear functional of u.
  int fixed_halvings = 0;
};

/// Principal value: truncated_flap plus the inner-disc Taylor term
/// -C u''(x) eps^{2-2s} / (2-2s), Richardson-extrapolated under eps-halving.
/// Throws ConvergenceError (with the observed contraction ratio) if the
/// extrapolated values do not settle within max_halvings; std::invalid_argument
/// for fields tagged rough.
double principal_value_flap(const ScalarField1D& u, double x, double s,
                            const PrincipalValueOptions& options = {});

/// (1 / Gamma(-s)) int_0^inf (G(t)u(x) - u(x)) t^{-1-s} dt with the Gauss-Weierstrass
/// semigroup G evaluated by quadrature of the heat kernel against u.
double balakrishnan_flap(const ScalarField1D& u, double x, double s);

struct Membership {
  bool member;
  double weight_integral;  // +inf when not a member
};

/// int |u(x)| (1 + |x|)^{-1-2s} dx, computed in q = (1 + |x|)^{-2s}; membership
/// is certified by the decay bound (exponent > -2s). Never throws for valid s.
Membership membership_L1s(const ScalarField1D& u, double s);

struct ConvergenceRow {
  double s;
  double lhs;  // int v (-Delta)^s u dx
  double rhs;  // int u' v' dx
  double gap;  // |lhs - rhs|
};

/// lhs by Gauss-Legendre quadrature of principal_value_flap over [-10, 10],
/// rhs from five-point derivatives on the same nodes.
std::vector<ConvergenceRow> convergence_to_laplacian(const ScalarField1D& u, const ScalarField1D& v,
                                                     const std::vector<double>& s_list);

}  // namespace fracsemi
