#pragma once
#include <Eigen/Dense>
#include <vector>

#include "mhelm/types.hpp"

namespace mhelm {

// Dense collocation system: matrix[k][m] = Gamma(x_k, src_m). Real storage for
// the modified kind (kernels are real), complex for the oscillatory kind.
struct MfsSystem {
  WaveNumber kappa;
  int dim;
  std::vector<Point> collocation;
  std::vector<Point> sources;
  Eigen::MatrixXd A;    // modified kind
  Eigen::MatrixXcd Ac;  // oscillatory kind
  Eigen::VectorXd b;
  Eigen::VectorXcd bc;
};

// Homogeneous solution u_N(x) = sum_k c_k Gamma(x, src_k).
struct MfsField {
  WaveNumber kappa;
  int dim;
  std::vector<Point> sources;
  std::vector<Complex> coeff;
};

struct SolveDiagnostics {
  double residual_norm;        // ||A c - b||_2
  double condition_indicator;  // |R_00 / R_{r-1,r-1}| from the pivoted factorization
  int rank;
  int size;
};

struct SolveResult {
  MfsField field;
  SolveDiagnostics diag;
};

MfsSystem assemble(const WaveNumber& kappa, int dim, std::vector<Point> collocation,
                   std::vector<Point> sources, const std::vector<double>& boundary_values);
MfsSystem assemble(const WaveNumber& kappa, int dim, std::vector<Point> collocation,
                   std::vector<Point> sources, const std::vector<Complex>& boundary_values);

// Least-squares solve by column-pivoted QR (rank-truncated when the pivots
// collapse -- MFS matrices are routinely numerically rank-deficient while the
// truncated solution is still excellent). regularization > 0 switches to the
// ridge form ||Ac-b||^2 + reg^2 ||c||^2 via the stacked system [A; reg I].
// Throws SolverError (advising regularization) only when the computed
// solution is meaningless: non-finite coefficients, or rank-deficient with
// relative residual above 1e-3.
SolveResult solve(const MfsSystem& system, double regularization = 0.0);

Complex eval(const MfsField& field, const Point& x);
double eval_real(const MfsField& field, const Point& x);

}  // namespace mhelm
