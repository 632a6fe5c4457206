#pragma once
#include "mhelm/quad.hpp"
#include "mhelm/types.hpp"

namespace mhelm {

// Radial basis functions for the quasi-interpolant:
//   Gaussian:  phi(r) = sqrt(c/pi) e^{-c r^2}
//   Bump:      phi(r) = (35/32)(1-r^2)^3 on |r| <= 1, else 0
// Both integrate to 1 over the real line (not over R^s); see mass().
struct Rbf {
  enum class Kind { Gaussian, Bump };
  Kind kind;
  double c = 0;  // Gaussian rate; unused for the bump

  static Rbf gaussian(double c) {
    if (!(c > 0)) throw std::domain_error("Rbf::gaussian: c must be > 0");
    return {Kind::Gaussian, c};
  }
  static Rbf bump() { return {Kind::Bump, 0}; }
};

double rbf_eval(const Rbf& rbf, double r);

// Tail descriptor feeding integrate_tail: GaussianDecay(c) or CompactSupport(1).
Decay rbf_decay(const Rbf& rbf);

// Integral of phi(|x|) over R^dim. The 1D mass is 1 for both kinds; the 2D/3D
// masses are what a caller must divide by when a unit-mass phi over R^s is
// required (Gaussian: sqrt(pi/c), pi/c; bump: 35 pi/128, 2 pi/9).
double rbf_mass(const Rbf& rbf, int dim);

}  // namespace mhelm
