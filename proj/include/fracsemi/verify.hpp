#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fracsemi/discrete.hpp"
#include "fracsemi/specfun.hpp"

namespace fracsemi {

/// z = r e^{i alpha}.
struct SectorPoint {
  double r;
  double alpha;

  std::complex<double> z() const { return std::polar(r, alpha); }
};

/// One inequality `value <= limit` inside a check.
struct Criterion {
  std::string name;
  double value;
  double limit;
  bool pass() const { return value <= limit; }
};

/// Outcome of one estimate check. `max_violation` is the largest excess of a
/// criterion value over its limit (0 when all hold); pass <=> max_violation <= tolerance.
/// Limits already include their own tolerances unless the check has a single
/// uniform tolerance, which is then reported in `tolerance`.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, double>> fitted_constants;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> refinement_trend;
  std::vector<Criterion> criteria;
};

/// Portable uniform generator: mt19937_64 mapped to [0, 1) by its top 53 bits,
/// so a seed gives the same stream on every platform.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed);
  double operator()();
  double operator()(double lo, double hi) { return lo + (hi - lo) * (*this)(); }

 private:
  std::mt19937_64 engine_;
};

// ---- kernel-level checks -------------------------------------------------

/// Subordinated vs Fourier (and vs the closed form at s = 1/2) on a t x r grid.
CheckReport check_kernel_agreement(const std::vector<double>& s_list, const std::vector<double>& t_grid,
                                   const std::vector<double>& r_grid);

/// rho(t, r) = P_s(t, r) t^{N/2s} (1 + r t^{-1/2s})^{N+2s}; C1 = min rho, C2 = max rho.
/// Passes iff 0 < C1 <= C2, C2/C1 <= max_spread, and rho is invariant under the
/// parabolic rescaling to 1e-9.
CheckReport check_two_sided_bounds(const FractionalOrder& order, const std::vector<double>& t_grid,
                                   const std::vector<double>& r_grid, double max_spread = 100.0);

/// Least-squares slope of log sup_r P_s(t, r) against log t; passes iff it is -N/2s to 1e-3.
CheckReport check_ultracontractivity(const FractionalOrder& order, const std::vector<double>& t_grid);

/// Discrete analogue on a spectral decomposition: C = max_t t^{1/2s} sup_ij K(t), compared
/// with the same quantity for the analytic kernel P_s(t, 0); passes iff C is finite and
/// at most twice the analytic constant.
CheckReport check_discrete_ultracontractivity(const SpectralDecomposition& S, const FractionalOrder& order,
                                              const std::vector<double>& t_grid);

/// M = sup |P_s(z, r)| (Re z)^{1/2s} (1 + r |z|^{-1/2s})^{(1+2s)(1-eps)} over |arg z| <= theta
/// (N = 1, b = 1). Passes iff M is finite and changes by at most 5% when the sector grid is refined.
CheckReport check_complex_kernel_bound(const FractionalOrder& order, double eps, double theta,
                                       const std::vector<double>& moduli, const std::vector<double>& r_grid);

// ---- discrete checks ------------------------------------------------------

/// Domination |e^{-tA} f| <= P_s(t) * |f| for random f on grids with n and 2n cells.
/// delta = max violation / max (P_s * |f|); passes iff delta(2n) <= 0.05 and delta halves.
CheckReport check_domination(double a, double b, std::size_t n, const FractionalOrder& order,
                             const std::vector<double>& t_list, std::size_t samples, std::uint64_t seed);

/// Nested domains (a, b) in (a - (b-a)/2, b + (b-a)/2) with the same h: form identity
/// b(u~, v~) <= a(u, v) on random nonnegative pairs, and kernel monotonicity K_inner <= K_outer.
CheckReport check_form_criterion(const DiscreteOperator& inner, const DiscreteOperator& outer,
                                 std::size_t samples, std::uint64_t seed,
                                 const std::vector<double>& t_list = {0.01, 0.1, 1.0});

/// Discrete first Beurling-Deny criteria plus the operational positivity and
/// L^infty-contractivity of e^{-tA}, t in t_list.
CheckReport check_submarkovian_forms(const DiscreteOperator& op, std::size_t samples, std::uint64_t seed,
                                     const std::vector<double>& t_list = {0.1, 1.0});

/// C(alpha) = sup_r |lambda| ||R(lambda, -A)|| <= max(1, 1/|sin alpha|) + 1e-12, lambda = r e^{i alpha}.
CheckReport check_resolvent_sector(const SpectralDecomposition& S, const std::vector<double>& alpha_list,
                                   const std::vector<double>& r_list);

/// C(alpha) = sup_r ||T(r e^{i alpha})||_{1->1}; C(0) <= 1, C nondecreasing in |alpha|,
/// fitted C0 = max C(alpha) (cos alpha)^{1/2s}; ||T(z)||_{2->2} <= 1 on random vectors.
CheckReport check_sector_norm_Lp(const SpectralDecomposition& S, const FractionalOrder& order,
                                 const std::vector<double>& alpha_list, const std::vector<double>& r_list,
                                 std::uint64_t seed);

/// Semigroup law on random sector pairs and strong continuity along rays.
CheckReport check_holomorphy_axioms(const SpectralDecomposition& S, const Grid1D& grid,
                                    std::size_t samples, std::uint64_t seed);

/// lambda_1 on (a, b) for n, 2n, 4n; extrapolated value, comparison with the spectral
/// fractional value (pi^2/(b-a)^2)^s, optionally against an oracle within 2%.
CheckReport check_first_eigenvalue(double a, double b, std::size_t n, const FractionalOrder& order,
                                   std::optional<double> oracle = std::nullopt);

/// Torsion problem f = 1, lambda = 0 on n and n/2 cells: weak-form residual, maximum
/// principle at lambda = 1, and optionally the centre value against an oracle
/// (5% on the finest grid, 1% after first-order extrapolation).
CheckReport check_exterior_dirichlet(double a, double b, std::size_t n, const FractionalOrder& order,
                                     std::uint64_t seed, std::optional<double> oracle = std::nullopt);

/// Gaussian pair u = v = e^{-x^2}: gap(s) decreasing along s_list and rhs = sqrt(pi/2) to 1e-6.
CheckReport check_laplacian_limit(const std::vector<double>& s_list);

struct EstimateConstants {
  double M;
  double omega;
  double b;
};

/// omega = ln M. Throws std::domain_error unless M >= 1 and b > 0.
EstimateConstants extend_estimate_constants(double M, double b);

/// M^{n+1} <= M e^{omega t} for t = n + tau, n <= 10, tau in [0, 1).
CheckReport check_extension_constants(double M, double b);

}  // namespace fracsemi
