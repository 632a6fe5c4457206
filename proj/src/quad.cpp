#include "mhelm/quad.hpp"

namespace mhelm {

double integrate_fn(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec) {
  return integrate(f, a, b, spec);
}

double integrate_tail_fn(const std::function<double(double)>& f, double a, const Decay& decay,
                         const QuadratureSpec& spec) {
  return integrate_tail(f, a, decay, spec);
}

}  // namespace mhelm
