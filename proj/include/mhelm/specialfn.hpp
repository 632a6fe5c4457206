#pragma once
#include "mhelm/types.hpp"

namespace mhelm {

// Order-zero Bessel functions on the real line, accurate to ~1e-12 relative
// (J0) / 1e-10 (Y0, I0, K0) over the argument ranges the solver produces
// (x <= 500 oscillatory, x <= ~700 modified). Series evaluation in long
// double below the crossover, asymptotic or continued-fraction form above.
double bessel_j0(double x);   // x >= 0
double bessel_y0(double x);   // x > 0
double bessel_i0(double x);   // x >= 0, overflow_error past ~713
double bessel_k0(double x);   // x > 0

// H0^(1). Oscillatory kind: J0(kr) + i Y0(kr). Modified kind: the analytic
// continuation H0^(1)(i z) = -(2i/pi) K0(z), purely imaginary, so real-kernel
// callers can take the K0 path with no cancellation.
Complex hankel1_0(const WaveNumber& kappa, double r);

// Free-space fundamental solution of Delta u + kappa^2 u = delta.
//   dim 2: (i/4) H0^(1)(kappa r)        modified: K0(lambda r)/(2 pi), real
//   dim 3: e^{i kappa r}/(4 pi r)       modified: e^{-lambda r}/(4 pi r), real
Complex fundamental_solution(const WaveNumber& kappa, int dim, double r);

}  // namespace mhelm
