#include "mhelm/timestep.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace mhelm {
namespace {

using FieldFn = std::function<double(const Point&)>;

FieldFn as_fn(const std::function<double(const Point&)>& f) {
  if (f) return f;
  return [](const Point&) { return 0.0; };
}

// A solved field is only trustworthy inside the closed domain: outside it
// both the homogeneous part and the stiff boundary layer continue like
// exp(+lambda * excursion), which would poison the next step's source
// samples on the inflated lattice. Extend by the Dirichlet image method
// instead: fold the point back inside and take
//   u_ext = g + (-1)^folds * (u(folded) - g),
// with g evaluated at the nearest boundary point. An odd number of wall
// crossings mirrors the field through the boundary value. This is the
// extension under which the true solution is C^1 across the wall (u = g with
// a boundary layer on the inside continues to 2g - u without a derivative
// kink), so the lattice samples stay free of sub-grid creases. Even
// reflection was tried first and leaves a |du/dn| crease at the wall whose
// aliased energy destabilizes stiff marches; clamping to the nearest
// boundary point floods the kernel average with boundary values. The
// formula is exact for boundary data that is locally constant along the
// wall, which covers the anchoring role it plays here.
FieldFn as_fn(const SolutionField& field, const Domain& domain,
              const std::function<double(const Point&, double)>& g, double t) {
  return [field, domain, g, t](const Point& x) {
    bool odd = false;
    const Point q = reflect_into(domain, x, odd);
    double v = eval(field, q);
    if (odd) {
      const double gv = g ? g(project_into(domain, x), t) : 0.0;
      v = 2.0 * gv - v;
    }
    return v;
  };
}

void check_scheme(const TimeScheme& scheme) {
  if (!(scheme.tau > 0.0)) throw std::domain_error("timestep: tau must be positive");
  if (scheme.steps < 1) throw std::domain_error("timestep: steps must be >= 1");
}

// All steps share one kernel parameter, so integral caching across steps is
// sound; install a shared cache when the caller did not bring one. Marches
// also need collocation coefficients for the step source: feeding raw samples
// through the quasi-interpolant low-passes the field once per step, which
// compounds into severe artificial damping over the run.
HelmConfig march_config(const HelmConfig& config) {
  HelmConfig c = config;
  if (c.mps) {
    if (!c.mps->cache) c.mps->cache = std::make_shared<IntegralCache>();
    c.mps->interpolate = true;
    if (c.mps->interpolate_cutoff <= 0.0) c.mps->interpolate_cutoff = 1e-4;
  }
  return c;
}

SolutionField solve_step(const IbvpProblem& problem, const HelmConfig& config,
                         double lambda, const FieldFn& source, double time) {
  HelmholtzProblem hp;
  hp.domain = problem.domain;
  hp.kappa = WaveNumber::modified(lambda);
  hp.source_f = source;
  auto g = problem.g;
  hp.dirichlet_g = [g, time](const Point& x) { return g ? g(x, time) : 0.0; };
  hp.mfs = config.mfs;
  hp.mps = config.mps;
  return solve_bvp(hp);
}

}  // namespace

std::vector<SolutionField> march_diffusion(const IbvpProblem& problem,
                                           const TimeScheme& scheme,
                                           const HelmConfig& config) {
  if (problem.kind != IbvpProblem::Kind::Diffusion)
    throw std::invalid_argument("march_diffusion: problem kind must be Diffusion");
  if (scheme.kind != TimeScheme::Kind::BackwardEulerDiffusion)
    throw std::invalid_argument("march_diffusion: scheme kind mismatch");
  check_scheme(scheme);
  if (!(problem.coefficient > 0.0))
    throw std::domain_error("march_diffusion: diffusivity must be positive");
  if (!config.mps)
    throw std::invalid_argument("march_diffusion: stepping needs an mps config");

  const double k = problem.coefficient;
  const double mu = (scheme.convention == TimeScheme::LambdaConvention::Pde)
                        ? 1.0 / (k * scheme.tau)
                        : k / scheme.tau;
  const double lambda = std::sqrt(mu);
  HelmConfig cfg = march_config(config);

  std::vector<SolutionField> fields;
  fields.reserve(static_cast<size_t>(scheme.steps));
  FieldFn prev = as_fn(problem.u0);
  auto forcing = problem.forcing;
  for (int n = 1; n <= scheme.steps; ++n) {
    FieldFn source = [prev, mu, forcing](const Point& x) {
      double p = prev(x);
      double h = -mu * p;
      if (forcing) h += forcing(p);
      return h;
    };
    fields.push_back(solve_step(problem, cfg, lambda, source, n * scheme.tau));
    prev = as_fn(fields.back(), problem.domain, problem.g, n * scheme.tau);
  }
  return fields;
}

std::vector<SolutionField> march_wave(const IbvpProblem& problem,
                                      const TimeScheme& scheme,
                                      const HelmConfig& config) {
  if (problem.kind != IbvpProblem::Kind::Wave)
    throw std::invalid_argument("march_wave: problem kind must be Wave");
  if (scheme.kind != TimeScheme::Kind::CentralWave)
    throw std::invalid_argument("march_wave: scheme kind mismatch");
  check_scheme(scheme);
  if (scheme.steps < 2)
    throw std::domain_error("march_wave: central scheme needs at least 2 steps");
  if (!(problem.coefficient > 0.0))
    throw std::domain_error("march_wave: wave speed must be positive");
  if (!config.mps)
    throw std::invalid_argument("march_wave: stepping needs an mps config");

  const double c = problem.coefficient;
  const double mu = 1.0 / (c * c * scheme.tau * scheme.tau);
  const double lambda = std::sqrt(mu);
  HelmConfig cfg = march_config(config);

  // Closed-form startup: u_0 given, u_1 = u_0 + tau v_0.
  FieldFn prev2 = as_fn(problem.u0);
  auto u0 = as_fn(problem.u0);
  auto v0 = as_fn(problem.v0);
  const double tau = scheme.tau;
  FieldFn prev1 = [u0, v0, tau](const Point& x) { return u0(x) + tau * v0(x); };

  std::vector<SolutionField> fields;
  fields.reserve(static_cast<size_t>(scheme.steps - 1));
  auto forcing = problem.forcing;
  for (int n = 2; n <= scheme.steps; ++n) {
    FieldFn source = [prev1, prev2, mu, forcing](const Point& x) {
      double p1 = prev1(x);
      double h = mu * (prev2(x) - 2.0 * p1);
      if (forcing) h += forcing(p1);
      return h;
    };
    fields.push_back(solve_step(problem, cfg, lambda, source, n * scheme.tau));
    prev2 = prev1;
    prev1 = as_fn(fields.back(), problem.domain, problem.g, n * scheme.tau);
  }
  return fields;
}

}  // namespace mhelm
