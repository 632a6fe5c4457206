#pragma once
#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "mhelm/types.hpp"

namespace mhelm {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_subdivisions = 200;
  double tail_exponent_cutoff = 36.0;  // e^{-36} < 1e-15: below double noise
};

// Raised when the adaptive scheme exhausts max_subdivisions; carries the best
// estimate so callers can decide whether the bound is still usable.
struct QuadratureError : SolverError {
  double estimate;
  double error_bound;
  QuadratureError(double est, double err)
      : SolverError("quadrature tolerance not met (estimate " + std::to_string(est) +
                    ", bound " + std::to_string(err) + ")"),
        estimate(est),
        error_bound(err) {}
};

// Decay descriptor for semi-infinite tails. Gaussian integrands are truncated
// where c t^2 - growth t reaches the cutoff exponent; compactly supported
// integrands are clamped to their support radius.
struct Decay {
  enum class Kind { Gaussian, CompactSupport };
  Kind kind;
  double param;       // Gaussian rate c, or support radius R
  double growth = 0;  // bound on any e^{g t} kernel growth under the integral

  static Decay gaussian(double c, double g = 0) { return {Kind::Gaussian, c, g}; }
  static Decay compact_support(double R) { return {Kind::CompactSupport, R, 0}; }
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1]
// (QUADPACK dqk15 nodes/weights).
inline constexpr double kXgk15[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk15[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg7[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15_panel(const F& f, double a, double b, double& result, double& err) {
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double fc = f(mid);
  double resg = fc * kWg7[3];
  double resk = fc * kWgk15[7];
  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk15[j];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    resk += kWgk15[j] * (f1 + f2);
    if (j & 1) resg += kWg7[j / 2] * (f1 + f2);
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk15[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk15[j] * (std::fabs(fv[j] - reskh) + std::fabs(fv[14 - j] - reskh));
  resasc *= std::fabs(h);
  result = resk * h;
  err = std::fabs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
}

struct Panel {
  double err, val, a, b;
  bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace detail

// Globally adaptive bisection with the embedded 15(7) rule: the worst panel
// is split until the summed error bound meets max(abs_tol, rel_tol*|I|).
template <class F>
double integrate(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(a <= b)) throw std::domain_error("integrate: requires a <= b");
  if (a == b) return 0.0;
  double v, e;
  detail::gk15_panel(f, a, b, v, e);
  std::priority_queue<detail::Panel> heap;
  heap.push({e, v, a, b});
  double total = v, toterr = e;
  for (int iter = 0; iter < spec.max_subdivisions; ++iter) {
    if (toterr <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) return total;
    detail::Panel w = heap.top();
    heap.pop();
    const double m = 0.5 * (w.a + w.b);
    double v1, e1, v2, e2;
    detail::gk15_panel(f, w.a, m, v1, e1);
    detail::gk15_panel(f, m, w.b, v2, e2);
    total += v1 + v2 - w.val;
    toterr += e1 + e2 - w.err;
    heap.push({e1, v1, w.a, m});
    heap.push({e2, v2, m, w.b});
  }
  if (toterr <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) return total;
  throw QuadratureError(total, toterr);
}

// Semi-infinite tail: truncate according to the decay descriptor, then
// integrate the finite remainder. Exactly 0 once the support is exhausted.
template <class F>
double integrate_tail(const F& f, double a, const Decay& decay,
                      const QuadratureSpec& spec = {}) {
  if (!(a >= 0)) throw std::domain_error("integrate_tail: requires a >= 0");
  double upper;
  if (decay.kind == Decay::Kind::CompactSupport) {
    upper = decay.param;
  } else {
    const double c = decay.param, g = decay.growth;
    upper = (g + std::sqrt(g * g + 4.0 * c * spec.tail_exponent_cutoff)) / (2.0 * c);
  }
  if (a >= upper) return 0.0;
  return integrate(f, a, upper, spec);
}

// std::function conveniences (python bindings, non-template call sites).
double integrate_fn(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec);
double integrate_tail_fn(const std::function<double(double)>& f, double a, const Decay& decay,
                         const QuadratureSpec& spec);

}  // namespace mhelm
