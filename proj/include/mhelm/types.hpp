#pragma once
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mhelm {

using Complex = std::complex<double>;

// Points are stored with three coordinates; 2D code leaves z = 0, so the
// Euclidean distance below is valid in both dimensions.
using Point = std::array<double, 3>;

inline Point pt(double x, double y, double z = 0.0) { return {x, y, z}; }

inline double dist(const Point& a, const Point& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline double norm(const Point& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

// Helmholtz coefficient. Oscillatory: kappa = magnitude, operator Delta + kappa^2.
// Modified: kappa = i*magnitude, operator Delta - magnitude^2. Single source of
// truth for kernel selection everywhere downstream.
struct WaveNumber {
  enum class Kind { Oscillatory, Modified };
  Kind kind;
  double magnitude;  // > 0

  static WaveNumber oscillatory(double k) {
    require(k, "oscillatory");
    return {Kind::Oscillatory, k};
  }
  static WaveNumber modified(double lam) {
    require(lam, "modified");
    return {Kind::Modified, lam};
  }
  bool is_modified() const { return kind == Kind::Modified; }

 private:
  static void require(double m, const char* what) {
    if (!(m > 0) || !std::isfinite(m))
      throw std::domain_error(std::string("WaveNumber(") + what +
                              "): magnitude must be finite and > 0");
  }
};

// Error taxonomy: config problems exit 2, solver problems exit 3 at the CLI.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mhelm
