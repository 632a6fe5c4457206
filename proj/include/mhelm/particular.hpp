#pragma once
#include <memory>
#include <mutex>
#include <unordered_map>

#include "mhelm/geometry.hpp"
#include "mhelm/quad.hpp"
#include "mhelm/rbf.hpp"
#include "mhelm/types.hpp"

namespace mhelm {

// Cache of the radial kernel integrals (A, B) keyed by the split radius
// S = n^gamma * r rounded to 12 significant digits. One instance is bound to
// a fixed (rbf, kappa, n, gamma, dim); time-stepping reuses a single cache
// across all steps since the kernel never changes. Thread-safe.
class IntegralCache {
 public:
  struct AB {
    double A;
    Complex B;
  };
  bool lookup(double split, AB& out) const;
  void store(double split, const AB& v);

 private:
  static double round_key(double split);
  mutable std::mutex mu_;
  std::unordered_map<double, AB> map_;
  static constexpr std::size_t kMaxEntries = 2'000'000;
};

struct ParticularPlan {
  Lattice lattice;
  Rbf rbf;
  WaveNumber kappa;
  int dim;
  QuadratureSpec quad_spec;
  std::shared_ptr<IntegralCache> cache;  // never null after make_particular_plan
  // Constant part of the source handled analytically instead of through the
  // kernel sum: the exact response to a constant c is -c/lambda^2 (modified)
  // or +c/kappa^2 (oscillatory). interpolate_samples deflates the sample mean
  // into this field; eval_fn / eval_un add the constant and its response back.
  double constant = 0.0;
};

ParticularPlan make_particular_plan(Lattice lattice, const Rbf& rbf, const WaveNumber& kappa,
                                    int dim, const QuadratureSpec& spec = {},
                                    std::shared_ptr<IntegralCache> cache = nullptr);

// The evaluable approximate particular solution u_n of (Delta + kappa^2) u = f_n.
struct ParticularField {
  ParticularPlan plan;
};

// Quasi-interpolant f_n(x) = n^{-s(1-gamma)} sum_j f(j/n) phi(n^gamma |x - j/n|).
double eval_fn(const ParticularPlan& plan, const Point& x);

// Replace the plan's lattice samples with collocation coefficients so that
// eval_fn reproduces the original samples at the nodes. The plain
// quasi-interpolant is a low-pass filter (kernel width ~ n^-gamma / sqrt(c)),
// which is fine for a single solve but fatal when a time march re-samples its
// own output every step; interpolation removes that per-step damping.
// The sample mean is first deflated into plan.constant (handled analytically;
// see ParticularPlan::constant), so the kernel sum only carries the spatial
// variation. That keeps the coefficients small and the evaluated field free
// of lattice-scale ripple along the boundary, where a collocation fit of a
// flat field through narrow kernels would otherwise oscillate.
// cutoff_rel sets a Tikhonov damp of cutoff_rel * lambda_max on the Gram
// spectrum: each eigencomponent is divided by (ev + damp) instead of ev.
// Sample components the kernel basis cannot represent (sub-lattice boundary
// layers of a stiff march) live in the spectral tail and would otherwise be
// amplified by 1/lambda_min into enormous +/- coefficient pairs; hard
// truncation of that tail was tried and leaves ringing, smooth damping wins.
void interpolate_samples(ParticularPlan& plan, double cutoff_rel = 0.0);

// u_n via the radial variation-of-parameters kernels. With mu = kappa n^{-gamma},
// S_j = n^gamma r_j, A_j = inner integral on [0, S_j], B_j = tail on [S_j, inf):
//   2D: -(1/n^2) sum f_j [K0(lam r_j) A_j + I0(lam r_j) B_j]           (modified)
//       -(i pi / (2 n^2)) sum f_j [H0(k r_j) A_j + J0(k r_j) B_j]      (oscillatory)
//   3D: -(n^{gamma-3}/lam) sum f_j (1/r_j)[e^{-lam r_j} A_j + sinh(lam r_j) B_j]
//       and the sin/exp analogue for the oscillatory kind.
// Modified-kind results are exactly real (assembled on the real path).
Complex eval_un_2d(const ParticularField& field, const Point& x);
Complex eval_un_3d(const ParticularField& field, const Point& x);

// Dimension dispatch; returns the real part (exact for the modified kind).
double eval_un(const ParticularField& field, const Point& x);

}  // namespace mhelm
