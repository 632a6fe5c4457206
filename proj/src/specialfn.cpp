#include "mhelm/specialfn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

// Order-zero Bessel evaluation: ascending series in long double below the
// crossover, Hankel asymptotic expansion (J0/Y0), all-positive asymptotic
// series (I0) or Steed's continued fraction (K0) above it. Crossovers chosen
// where the truncated asymptotic tail drops below ~1e-13 absolute:
//   J0/Y0 at x = 16 (optimal truncation error ~ e^{-2x}),
//   I0 at x = 30 (series has no cancellation, so it can run long),
//   K0 at x = 8  (series cancellation stays below 1e-12 in long double).

namespace mhelm {

namespace {

using ld = long double;

constexpr ld kEulerGamma = 0.5772156649015328606065120900824024L;
constexpr ld kPi = 3.1415926535897932384626433832795029L;

void check_finite(double x, const char* fn) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(fn) + ": non-finite argument");
}

// J0 ascending series: sum (-1)^k (x^2/4)^k / (k!)^2.
ld j0_series(ld x) {
  const ld q = x * x / 4.0L;
  ld term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 80; ++k) {
    term *= -q / ((ld)k * (ld)k);
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return sum;
}

// Y0 ascending series: (2/pi)[(ln(x/2)+gamma) J0(x) + sum (-1)^{k+1} H_k q^k/(k!)^2].
ld y0_series(ld x) {
  const ld q = x * x / 4.0L;
  ld term = 1.0L, sum = 0.0L, hk = 0.0L;
  for (int k = 1; k < 80; ++k) {
    term *= q / ((ld)k * (ld)k);
    hk += 1.0L / (ld)k;
    const ld add = ((k & 1) ? term : -term) * hk;
    sum += add;
    if (std::fabs(term) * (hk + 1.0L) < 1e-22L * (std::fabs(sum) + 1e-30L)) break;
  }
  return (2.0L / kPi) * ((std::log(x / 2.0L) + kEulerGamma) * j0_series(x) + sum);
}

// Hankel asymptotic modulus/phase sums for order 0:
//   P = sum (-1)^m c_{2m},  Q = sum (-1)^m c_{2m+1},
//   c_k = ((2k-1)!!)^2 / (k! (8x)^k), truncated at the smallest term.
void hankel_pq(ld x, ld& P, ld& Q) {
  P = 1.0L;
  Q = 0.0L;
  ld c = 1.0L, prev = std::numeric_limits<ld>::max();
  for (int k = 1; k < 40; ++k) {
    const ld odd = 2.0L * k - 1.0L;
    c *= odd * odd / ((ld)k * 8.0L * x);
    if (c >= prev) break;  // divergent tail reached
    prev = c;
    const int m = k / 2;
    const ld s = (m & 1) ? -c : c;
    if (k & 1)
      Q += s;
    else
      P += s;
    if (c < 1e-20L) break;
  }
}

ld j0_asymptotic(ld x) {
  ld P, Q;
  hankel_pq(x, P, Q);
  const ld chi = x - kPi / 4.0L;
  return std::sqrt(2.0L / (kPi * x)) * (P * std::cos(chi) + Q * std::sin(chi));
}

ld y0_asymptotic(ld x) {
  ld P, Q;
  hankel_pq(x, P, Q);
  const ld chi = x - kPi / 4.0L;
  return std::sqrt(2.0L / (kPi * x)) * (P * std::sin(chi) - Q * std::cos(chi));
}

// I0 ascending series: all terms positive, usable far beyond the J0 range.
ld i0_series(ld x) {
  const ld q = x * x / 4.0L;
  ld term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / ((ld)k * (ld)k);
    sum += term;
    if (term < 1e-21L * sum) break;
  }
  return sum;
}

// I0 asymptotic: e^x/sqrt(2 pi x) * sum c_k, same c_k as hankel_pq but with
// all plus signs; terms shrink to ~e^{-2x} before diverging.
ld i0_asymptotic(ld x) {
  ld c = 1.0L, sum = 1.0L, prev = std::numeric_limits<ld>::max();
  for (int k = 1; k < 60; ++k) {
    const ld odd = 2.0L * k - 1.0L;
    c *= odd * odd / ((ld)k * 8.0L * x);
    if (c >= prev) break;
    prev = c;
    sum += c;
    if (c < 1e-20L * sum) break;
  }
  return std::exp(x) / std::sqrt(2.0L * kPi * x) * sum;
}

// K0 ascending series: -(ln(x/2)+gamma) I0(x) + sum H_k q^k/(k!)^2.
ld k0_series(ld x) {
  const ld q = x * x / 4.0L;
  ld term = 1.0L, sum = 0.0L, hk = 0.0L;
  for (int k = 1; k < 120; ++k) {
    term *= q / ((ld)k * (ld)k);
    hk += 1.0L / (ld)k;
    sum += term * hk;
    if (term * (hk + 1.0L) < 1e-22L * (sum + 1e-30L)) break;
  }
  return -(std::log(x / 2.0L) + kEulerGamma) * i0_series(x) + sum;
}

// K0 for large x via Steed's continued fraction (CF2) at order 0:
// K0(x) = sqrt(pi/(2x)) e^{-x} / S with S accumulated alongside the
// Lentz-style evaluation of the fraction.
ld k0_steed(ld x) {
  const ld eps = 1e-20L;
  ld b = 2.0L * (1.0L + x);
  ld d = 1.0L / b;
  ld h = d, delh = d;
  ld q1 = 0.0L, q2 = 1.0L;
  const ld a1 = 0.25L;
  ld q = a1, c = a1, a = -a1;
  ld s = 1.0L + q * delh;
  for (int i = 2; i <= 20000; ++i) {
    a -= 2.0L * (i - 1);
    c = -a * c / (ld)i;
    const ld qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0L;
    d = 1.0L / (b + a * d);
    delh = (b * d - 1.0L) * delh;
    h += delh;
    const ld dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) < eps) break;
  }
  return std::sqrt(kPi / (2.0L * x)) * std::exp(-x) / s;
}

}  // namespace

double bessel_j0(double x) {
  check_finite(x, "bessel_j0");
  if (x < 0) throw std::domain_error("bessel_j0: negative argument");
  if (x <= 16.0) return (double)j0_series((ld)x);
  return (double)j0_asymptotic((ld)x);
}

double bessel_y0(double x) {
  check_finite(x, "bessel_y0");
  if (x <= 0) throw std::domain_error("bessel_y0: argument must be > 0");
  if (x <= 16.0) return (double)y0_series((ld)x);
  return (double)y0_asymptotic((ld)x);
}

double bessel_i0(double x) {
  check_finite(x, "bessel_i0");
  if (x < 0) throw std::domain_error("bessel_i0: negative argument");
  if (x > 713.0) throw std::overflow_error("bessel_i0: overflow (x > 713)");
  if (x <= 30.0) return (double)i0_series((ld)x);
  return (double)i0_asymptotic((ld)x);
}

double bessel_k0(double x) {
  check_finite(x, "bessel_k0");
  if (x <= 0) throw std::domain_error("bessel_k0: argument must be > 0");
  if (x <= 8.0) return (double)k0_series((ld)x);
  return (double)k0_steed((ld)x);
}

Complex hankel1_0(const WaveNumber& kappa, double r) {
  if (!(r > 0)) throw std::domain_error("hankel1_0: r must be > 0 (log singularity)");
  const double z = kappa.magnitude * r;
  if (kappa.is_modified()) return Complex(0.0, -(2.0 / M_PI) * bessel_k0(z));
  return Complex(bessel_j0(z), bessel_y0(z));
}

Complex fundamental_solution(const WaveNumber& kappa, int dim, double r) {
  if (!(r > 0)) throw std::domain_error("fundamental_solution: r must be > 0");
  if (dim != 2 && dim != 3) throw std::domain_error("fundamental_solution: dim must be 2 or 3");
  const double z = kappa.magnitude * r;
  if (kappa.is_modified()) {
    if (dim == 2) return Complex(bessel_k0(z) / (2.0 * M_PI), 0.0);
    return Complex(std::exp(-z) / (4.0 * M_PI * r), 0.0);
  }
  if (dim == 2) {
    // (i/4)(J0 + iY0) = (-Y0 + iJ0)/4
    return Complex(-bessel_y0(z) / 4.0, bessel_j0(z) / 4.0);
  }
  return Complex(std::cos(z), std::sin(z)) / (4.0 * M_PI * r);
}

}  // namespace mhelm
