#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fracsemi/dense.hpp"
#include "fracsemi/specfun.hpp"

namespace fracsemi {

/// Uniform cell-centred grid on (a, b): nodes x_i = a + (i + 1/2) h.
struct Grid1D {
  double a;
  double b;
  std::size_t n;
  double h;
  std::vector<double> nodes;

  /// Throws std::domain_error unless a < b and n >= 8.
  Grid1D(double a, double b, std::size_t n);
};

/// Index of `inner.nodes[0]` within `outer.nodes`. Throws std::invalid_argument
/// unless the grids share h and inner's nodes are a subset of outer's.
std::size_t nested_offset(const Grid1D& inner, const Grid1D& outer);

enum class BoundaryKind { dirichlet };

/// A_h: symmetric M-matrix realizing the restricted fractional Laplacian with zero
/// exterior data. The constructor is public so perturbed operators can be built in tests.
class DiscreteOperator {
 public:
  DiscreteOperator(Matrix matrix, Grid1D grid, FractionalOrder order,
                   BoundaryKind kind = BoundaryKind::dirichlet);

  const Matrix& matrix() const { return matrix_; }
  const Grid1D& grid() const { return grid_; }
  const FractionalOrder& order() const { return order_; }
  BoundaryKind kind() const { return kind_; }
  std::size_t size() const { return grid_.n; }

 private:
  Matrix matrix_;
  Grid1D grid_;
  FractionalOrder order_;
  BoundaryKind kind_;
};

/// Eigenpairs of A_h in ascending order. Row k of `vectors` is the k-th
/// (unit-norm) eigenvector, i.e. `vectors` holds Q^T.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix vectors;
  double h;

  std::size_t size() const { return eigenvalues.size(); }
  std::vector<double> eigenvector(std::size_t k) const;
};

/// Cell-averaged second moment correction of the near field; see assemble_dirichlet.
double near_field_moment(double s);

/// Exterior killing mass kappa_i = [(x_i - a)^{-2s} + (b - x_i)^{-2s}] / (2s).
double killing_mass(const Grid1D& grid, std::size_t i, double s);

/// Dense assembly on `grid` for N = 1. Off-diagonal entries are the exact cell
/// weights; the diagonal follows from telescoping them against the killing mass;
/// a nearest-neighbour stencil accounts for the singular cell around each node.
DiscreteOperator assemble_dirichlet(const Grid1D& grid, const FractionalOrder& order);

/// E_h(u, v) = u^T A_h v * h.
double form_apply(const DiscreteOperator& op, const std::vector<double>& u,
                  const std::vector<double>& v);

/// Full eigendecomposition by cyclic Jacobi (round-robin ordering, 50 sweeps max),
/// keeping the first `count` pairs (all when count == 0). Throws ConvergenceError.
SpectralDecomposition spectrum(const DiscreteOperator& op, std::size_t count = 0);

/// Q diag(exp(-z lambda_k)) Q^T f for Re z >= 0.
std::vector<std::complex<double>> semigroup_apply(const SpectralDecomposition& S,
                                                  std::complex<double> z,
                                                  const std::vector<std::complex<double>>& f);
std::vector<std::complex<double>> semigroup_apply(const SpectralDecomposition& S,
                                                  std::complex<double> z,
                                                  const std::vector<double>& f);
/// Real time, real data.
std::vector<double> semigroup_apply(const SpectralDecomposition& S, double t,
                                    const std::vector<double>& f);

/// ||(lambda + A_h)^{-1}||_2 = 1 / min_k |lambda + lambda_k|, the resolvent of the
/// generator -A_h. Throws std::domain_error when lambda is within 1e-14 of the spectrum.
double resolvent_norm(const SpectralDecomposition& S, std::complex<double> lambda);

/// e^{-t A_h} as a matrix.
Matrix semigroup_matrix(const SpectralDecomposition& S, double t);
/// [e^{-z A_h}]_{ij} / h, the discrete heat kernel K(z, x_i, x_j).
ComplexMatrix kernel_matrix(const SpectralDecomposition& S, std::complex<double> z);
Matrix kernel_matrix(const SpectralDecomposition& S, double t);

struct SolveResult {
  std::vector<double> u;
  std::size_t iterations;
  double relative_residual;
};

/// (A_h + lambda I) u = f by unpreconditioned conjugate gradients to relative
/// residual 1e-10; throws ConvergenceError after 10 n iterations.
SolveResult solve_exterior_dirichlet(const DiscreteOperator& op, double lambda,
                                     const std::vector<double>& f);

}  // namespace fracsemi
