#include "mhelm/drm.hpp"

namespace mhelm {

SolutionField solve_bvp(const HelmholtzProblem& p) {
  if (p.bc == HelmholtzProblem::BoundaryOperator::Neumann)
    throw SolverError("solve_bvp: Neumann boundary operators are not supported");
  if (!p.dirichlet_g) throw SolverError("solve_bvp: missing Dirichlet data");
  if (p.mfs.N < 1) throw SolverError("solve_bvp: mfs.N must be >= 1");

  std::vector<Point> sources = source_points(p.mfs.shape, p.mfs.N);
  for (const Point& s : sources)
    if (contains(p.domain, s))
      throw SolverError("solve_bvp: fictitious surface does not enclose the domain");
  std::vector<Point> colloc =
      boundary_points(p.domain, p.mfs.N * std::max(1, p.mfs.boundary_oversample));

  SolutionField out{std::nullopt, {}, {}};

  if (p.source_f) {
    if (!p.mps) throw SolverError("solve_bvp: source term present but no mps configuration");
    const MpsConfig& m = *p.mps;
    const double mass =
        (m.normalize_mass && !m.interpolate) ? rbf_mass(m.rbf, p.domain.dim) : 1.0;
    const auto& f = p.source_f;
    Lattice L = lattice(p.domain, m.n, m.gamma, m.delta,
                        [&](const Point& x) { return f(x) / mass; });
    ParticularPlan plan =
        make_particular_plan(std::move(L), m.rbf, p.kappa, p.domain.dim, m.quad, m.cache);
    if (m.interpolate) interpolate_samples(plan, m.interpolate_cutoff);
    out.particular = ParticularField{std::move(plan)};
  }

  if (p.kappa.is_modified() || !out.particular) {
    std::vector<double> rhs(colloc.size());
    for (std::size_t k = 0; k < colloc.size(); ++k) {
      rhs[k] = p.dirichlet_g(colloc[k]) -
               (out.particular ? eval_un(*out.particular, colloc[k]) : 0.0);
    }
    SolveResult r =
        solve(assemble(p.kappa, p.domain.dim, std::move(colloc), std::move(sources), rhs),
              p.mfs.regularization);
    out.homogeneous = std::move(r.field);
    out.diag = r.diag;
  } else {
    std::vector<Complex> rhs(colloc.size());
    for (std::size_t k = 0; k < colloc.size(); ++k) {
      const Complex un = p.domain.dim == 2 ? eval_un_2d(*out.particular, colloc[k])
                                           : eval_un_3d(*out.particular, colloc[k]);
      rhs[k] = Complex(p.dirichlet_g(colloc[k]), 0.0) - un;
    }
    SolveResult r =
        solve(assemble(p.kappa, p.domain.dim, std::move(colloc), std::move(sources), rhs),
              p.mfs.regularization);
    out.homogeneous = std::move(r.field);
    out.diag = r.diag;
  }
  return out;
}

double eval(const SolutionField& s, const Point& x) {
  double v = eval_real(s.homogeneous, x);
  if (s.particular) v += eval_un(*s.particular, x);
  return v;
}

Complex eval_complex(const SolutionField& s, const Point& x) {
  Complex v = eval(s.homogeneous, x);
  if (s.particular) {
    v += s.particular->plan.dim == 2 ? eval_un_2d(*s.particular, x)
                                     : eval_un_3d(*s.particular, x);
  }
  return v;
}

}  // namespace mhelm
