#pragma once
#include <vector>

#include "mhelm/ibvp.hpp"

namespace mhelm {

// Time-difference schemes that reduce each step to one modified Helmholtz
// solve with kernel parameter sqrt(mu).
//
// Backward Euler diffusion:  (Delta - mu) u_n = -mu u_{n-1} + forcing(u_{n-1})
//   mu = 1/(k tau)  under LambdaConvention::Pde   (consistent with u_t = k Delta u)
//   mu = k/tau      under LambdaConvention::Legacy (historical form, switchable)
// Central wave:              (Delta - mu) u_n = mu (u_{n-2} - 2 u_{n-1}),
//   mu = 1/(c tau)^2, with startup u_1 = u_0 + tau v_0 (no solve at step 1).
struct TimeScheme {
  enum class Kind { BackwardEulerDiffusion, CentralWave };
  enum class LambdaConvention { Pde, Legacy };
  Kind kind = Kind::BackwardEulerDiffusion;
  double tau = 0.0;  // step size, > 0
  int steps = 0;     // number of steps M, >= 1
  LambdaConvention convention = LambdaConvention::Pde;
};

// Marches the IBVP. Returns the fields produced by the Helmholtz solves, in
// step order: diffusion yields steps 1..M (M fields); wave yields steps 2..M
// (M-1 fields; steps 0 and 1 are closed-form and never solved). The final
// entry evaluates the solution at time M*tau.
std::vector<SolutionField> march_diffusion(const IbvpProblem& problem,
                                           const TimeScheme& scheme,
                                           const HelmConfig& config);

std::vector<SolutionField> march_wave(const IbvpProblem& problem,
                                      const TimeScheme& scheme,
                                      const HelmConfig& config);

}  // namespace mhelm
