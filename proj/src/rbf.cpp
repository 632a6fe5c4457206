#include "mhelm/rbf.hpp"

#include <cmath>

namespace mhelm {

double rbf_eval(const Rbf& rbf, double r) {
  if (!(r >= 0)) throw std::domain_error("rbf_eval: r must be >= 0");
  if (rbf.kind == Rbf::Kind::Gaussian)
    return std::sqrt(rbf.c / M_PI) * std::exp(-rbf.c * r * r);
  if (r >= 1.0) return 0.0;
  const double u = 1.0 - r * r;
  return (35.0 / 32.0) * u * u * u;
}

Decay rbf_decay(const Rbf& rbf) {
  if (rbf.kind == Rbf::Kind::Gaussian) return Decay::gaussian(rbf.c);
  return Decay::compact_support(1.0);
}

double rbf_mass(const Rbf& rbf, int dim) {
  if (dim < 1 || dim > 3) throw std::domain_error("rbf_mass: dim must be 1, 2 or 3");
  if (rbf.kind == Rbf::Kind::Gaussian) {
    // integral over R^s of sqrt(c/pi) e^{-c r^2} = (pi/c)^{(s-1)/2}
    return std::pow(M_PI / rbf.c, 0.5 * (dim - 1));
  }
  switch (dim) {
    case 1:
      return 1.0;
    case 2:
      return 35.0 * M_PI / 128.0;
    default:
      return 2.0 * M_PI / 9.0;
  }
}

}  // namespace mhelm
