#pragma once
#include <functional>

#include "mhelm/drm.hpp"
#include "mhelm/geometry.hpp"

namespace mhelm {

// Diffusion (1/k) u_t = Delta u  or wave u_tt = c^2 Delta u, with Dirichlet
// data g(x, t), initial value u0 (and velocity v0 for the wave kind).
struct IbvpProblem {
  enum class Kind { Diffusion, Wave };
  Kind kind;
  double coefficient;  // diffusivity k or speed c, > 0
  Domain domain;
  std::function<double(const Point&)> u0;
  std::function<double(const Point&)> v0;             // wave only
  std::function<double(const Point&, double)> g;      // (x, t)
  std::function<double(double)> forcing;              // applied to u_{n-1}(x); optional
};

// Helmholtz sub-solver configuration used by every transform node / time step.
struct HelmConfig {
  MfsConfig mfs;
  std::optional<MpsConfig> mps;
};

}  // namespace mhelm
