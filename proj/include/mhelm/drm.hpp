#pragma once
#include <functional>
#include <memory>
#include <optional>

#include "mhelm/geometry.hpp"
#include "mhelm/mfs.hpp"
#include "mhelm/particular.hpp"

namespace mhelm {

struct MfsConfig {
  int N = 0;
  SourceShape shape;
  double regularization = 0.0;
  // Boundary collocation points per source. 1 = square interpolation (the
  // classic setup); > 1 fits the boundary data in least squares over an
  // oversampled boundary, which resists high-frequency wiggles in noisy
  // corrected data at a modest cost.
  int boundary_oversample = 1;
};

struct MpsConfig {
  Rbf rbf = Rbf::gaussian(1.0);
  int n = 1;
  double gamma = 0.5;
  double delta = 0.1;
  QuadratureSpec quad;
  // Divide source samples by the R^s mass of phi so the quasi-interpolant
  // converges to f itself (the example RBFs are only 1D-normalized).
  bool normalize_mass = true;
  // Solve for collocation coefficients instead of using the samples directly,
  // making the RBF sum exact at the lattice nodes. Time marches switch this
  // on: re-sampling a field through the plain quasi-interpolant damps it a
  // little every step, and the damping compounds. Supersedes normalize_mass
  // (any constant factor is absorbed by the coefficients).
  bool interpolate = false;
  // Relative spectral cutoff for the interpolation solve; see
  // interpolate_samples. 0 keeps the full spectrum.
  double interpolate_cutoff = 0.0;
  std::shared_ptr<IntegralCache> cache;  // optional; shared across time steps
};

// (Delta + kappa^2) u = f on Omega, u = g on the boundary. Neumann data is
// representable as a seam but rejected at solve time (nothing exercises it).
struct HelmholtzProblem {
  enum class BoundaryOperator { Dirichlet, Neumann };
  Domain domain;
  WaveNumber kappa;
  std::function<double(const Point&)> source_f;  // null or empty => f == 0
  std::function<double(const Point&)> dirichlet_g;
  BoundaryOperator bc = BoundaryOperator::Dirichlet;
  MfsConfig mfs;
  std::optional<MpsConfig> mps;  // required when source_f is set
};

// u = u_n + v: the particular part (absent for f == 0) plus the homogeneous
// MFS field solved against the corrected boundary data g - u_n.
struct SolutionField {
  std::optional<ParticularField> particular;
  MfsField homogeneous;
  SolveDiagnostics diag;
};

SolutionField solve_bvp(const HelmholtzProblem& p);

double eval(const SolutionField& s, const Point& x);
Complex eval_complex(const SolutionField& s, const Point& x);

}  // namespace mhelm
