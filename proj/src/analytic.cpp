#include "mhelm/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace mhelm {
namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double ref_exp_sin(const Point& x) { return std::exp(-2.0 * x[0]) * std::sin(x[1]); }

double ref_xy_exp(const Point& x) { return x[0] * x[1] * std::exp(x[1]); }

double ref_xy_exp_source(const Point& x) { return 2.0 * x[0] * std::exp(x[1]); }

double ref_x2y_exp_z(const Point& x) { return x[0] * x[0] * x[1] * std::exp(x[2]); }

double ref_x2y_exp_z_source(const Point& x) { return 2.0 * x[1] * std::exp(x[2]); }

double diffusion_series(double x, double y, double t, double k, const SeriesSpec& spec) {
  if (!(k > 0.0)) throw std::domain_error("diffusion_series: k must be positive");
  if (!(t > 0.0)) throw std::domain_error("diffusion_series: t must be positive");
  // Half-width of the square; modes cos((2n+1) pi x / (2a)).
  const double a = 0.2;
  const double q = k * kPi * kPi * t / (4.0 * a * a);
  const double scale = 16.0 / (kPi * kPi);
  double sum = 0.0;
  for (int n = 0; n <= spec.max_index; ++n) {
    const double an = 2.0 * n + 1.0;
    if (scale * std::exp(-q * (an * an + 1.0)) / an < spec.tail_tol) break;
    double row = 0.0;
    for (int m = 0; m <= spec.max_index; ++m) {
      const double am = 2.0 * m + 1.0;
      const double mag = std::exp(-q * (an * an + am * am)) / (an * am);
      if (scale * mag < spec.tail_tol) break;
      const double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
      row += sign * mag * std::cos(an * kPi * x / (2.0 * a)) *
             std::cos(am * kPi * y / (2.0 * a));
    }
    sum += row;
  }
  return scale * sum;
}

double wave_series(double x, double y, double t, const SeriesSpec& spec) {
  const double scale = 4.0 / (kPi * kPi);
  double sum = 0.0, comp = 0.0;  // compensated accumulator
  int quiet_bands = 0;
  for (int s = 2; s <= 2 * spec.max_index; ++s) {
    double band = 0.0, envelope = 0.0;
    const int m_lo = std::max(1, s - spec.max_index);
    const int m_hi = std::min(spec.max_index, s - 1);
    for (int m = m_lo; m <= m_hi; ++m) {
      const int n = s - m;
      const double lam =
          kPi * std::sqrt(static_cast<double>(m) * m + static_cast<double>(n) * n);
      const double coeff = 1.0 / (static_cast<double>(m) * n * lam);
      envelope += coeff;
      const double sign = (s % 2 == 0) ? 1.0 : -1.0;
      band += sign * coeff * std::sin(lam * t) * std::sin(m * kPi * x) *
              std::sin(n * kPi * y);
    }
    const double yv = scale * band - comp;
    const double tv = sum + yv;
    comp = (tv - sum) - yv;
    sum = tv;
    // Individual bands can be accidentally small; require a sustained drop.
    if (scale * envelope < spec.tail_tol) {
      if (++quiet_bands >= 3) break;
    } else {
      quiet_bands = 0;
    }
  }
  return sum;
}

ErrorReport error_report(const std::function<double(const Point&)>& numeric,
                         const std::function<double(const Point&)>& reference,
                         const std::vector<Point>& points) {
  ErrorReport report;
  report.abs_errors.reserve(points.size());
  for (const Point& p : points) {
    const double e = std::abs(numeric(p) - reference(p));
    report.abs_errors.push_back(e);
    if (e > report.max_abs) report.max_abs = e;
  }
  return report;
}

}  // namespace mhelm
