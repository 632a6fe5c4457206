#include "mhelm/stehfest.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace mhelm {
namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void check_ns(int ns) {
  if (ns < 2 || ns > 20 || ns % 2 != 0)
    throw std::domain_error("stehfest: ns must be even and within [2, 20]");
}

// Exact rational weights; the double vector is the single rounding step.
std::vector<BigRat> exact_weights(int ns) {
  check_ns(ns);
  const int half = ns / 2;
  std::vector<BigRat> w(static_cast<size_t>(ns));
  for (int l = 1; l <= ns; ++l) {
    BigRat acc = 0;
    const int lo = (l + 1) / 2;
    const int hi = std::min(l, half);
    for (int i = lo; i <= hi; ++i) {
      BigInt num = 1;
      for (int p = 0; p < half; ++p) num *= i;  // i^(ns/2)
      num *= factorial(2 * i);
      BigInt den = factorial(half - i) * factorial(i) * factorial(i - 1) *
                   factorial(l - i) * factorial(2 * i - l);
      acc += BigRat(num, den);
    }
    if ((half + l) % 2 != 0) acc = -acc;
    w[static_cast<size_t>(l - 1)] = acc;
  }
  return w;
}

}  // namespace

std::vector<double> stehfest_weights(int ns) {
  auto exact = exact_weights(ns);
  std::vector<double> w(exact.size());
  for (size_t i = 0; i < exact.size(); ++i) w[i] = exact[i].convert_to<double>();
  return w;
}

std::pair<double, double> stehfest_identity_defects(int ns) {
  auto exact = exact_weights(ns);
  BigRat sum = 0, moment = 0;
  for (size_t i = 0; i < exact.size(); ++i) {
    sum += exact[i];
    moment += exact[i] / BigRat(static_cast<int>(i) + 1);
  }
  moment -= 1;  // sum of w_l / l must equal exactly 1
  return {sum.convert_to<double>(), moment.convert_to<double>()};
}

StehfestPlan stehfest_plan(int ns, double t) {
  check_ns(ns);
  if (!(t > 0.0)) throw std::domain_error("stehfest: t must be positive");
  StehfestPlan plan;
  plan.ns = ns;
  plan.t = t;
  plan.weights = stehfest_weights(ns);
  plan.nodes.resize(static_cast<size_t>(ns));
  const double ln2_over_t = std::log(2.0) / t;
  for (int l = 1; l <= ns; ++l)
    plan.nodes[static_cast<size_t>(l - 1)] = static_cast<double>(l) * ln2_over_t;
  return plan;
}

double stehfest_invert(const StehfestPlan& plan, const std::vector<double>& values) {
  if (values.size() != plan.weights.size())
    throw std::invalid_argument("stehfest_invert: values size mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < values.size(); ++i) acc += plan.weights[i] * values[i];
  return acc * std::log(2.0) / plan.t;
}

namespace {

// One transformed Helmholtz solve per node. Caches must not be shared across
// nodes: the kernel parameter differs node to node, so any caller-provided
// cache is replaced by a fresh per-node one.
HelmConfig per_node_config(const HelmConfig& config) {
  HelmConfig c = config;
  if (c.mps) c.mps->cache = nullptr;
  return c;
}

std::function<double(const Point&)> invert_fields(
    StehfestPlan plan, std::shared_ptr<std::vector<SolutionField>> fields) {
  return [plan = std::move(plan), fields = std::move(fields)](const Point& x) {
    double acc = 0.0;
    for (size_t i = 0; i < fields->size(); ++i)
      acc += plan.weights[i] * eval((*fields)[i], x);
    return acc * std::log(2.0) / plan.t;
  };
}

}  // namespace

std::function<double(const Point&)> solve_diffusion_lt(
    const IbvpProblem& problem, double t, int ns,
    const std::function<double(const Point&, double)>& g_transform,
    const HelmConfig& config) {
  if (problem.kind != IbvpProblem::Kind::Diffusion)
    throw std::invalid_argument("solve_diffusion_lt: problem kind must be Diffusion");
  if (!(problem.coefficient > 0.0))
    throw std::domain_error("solve_diffusion_lt: diffusivity must be positive");
  if (!g_transform) throw std::invalid_argument("solve_diffusion_lt: missing boundary transform");
  if (problem.u0 && !config.mps)
    throw std::invalid_argument("solve_diffusion_lt: nonzero initial state needs an mps config");

  const double k = problem.coefficient;
  StehfestPlan plan = stehfest_plan(ns, t);
  HelmConfig node_cfg = per_node_config(config);
  auto fields = std::make_shared<std::vector<SolutionField>>();
  fields->reserve(plan.nodes.size());
  for (double s : plan.nodes) {
    HelmholtzProblem hp;
    hp.domain = problem.domain;
    hp.kappa = WaveNumber::modified(std::sqrt(s / k));
    if (problem.u0) {
      auto u0 = problem.u0;
      hp.source_f = [u0, k](const Point& x) { return -u0(x) / k; };
    }
    hp.dirichlet_g = [&g_transform, s](const Point& x) { return g_transform(x, s); };
    hp.mfs = node_cfg.mfs;
    if (hp.source_f) hp.mps = node_cfg.mps;
    fields->push_back(solve_bvp(hp));
  }
  return invert_fields(std::move(plan), std::move(fields));
}

std::function<double(const Point&)> solve_wave_lt(
    const IbvpProblem& problem, double t, int ns,
    const std::function<double(const Point&, double)>& g_transform,
    const HelmConfig& config, WaveSourceForm form) {
  if (problem.kind != IbvpProblem::Kind::Wave)
    throw std::invalid_argument("solve_wave_lt: problem kind must be Wave");
  if (!(problem.coefficient > 0.0))
    throw std::domain_error("solve_wave_lt: wave speed must be positive");
  if (!g_transform) throw std::invalid_argument("solve_wave_lt: missing boundary transform");
  if ((problem.u0 || problem.v0) && !config.mps)
    throw std::invalid_argument("solve_wave_lt: nonzero initial data needs an mps config");

  const double c = problem.coefficient;
  StehfestPlan plan = stehfest_plan(ns, t);
  HelmConfig node_cfg = per_node_config(config);
  auto fields = std::make_shared<std::vector<SolutionField>>();
  fields->reserve(plan.nodes.size());
  for (double s : plan.nodes) {
    HelmholtzProblem hp;
    hp.domain = problem.domain;
    hp.kappa = WaveNumber::modified(s / c);
    if (problem.u0 || problem.v0) {
      auto u0 = problem.u0;
      auto v0 = problem.v0;
      const double scale = (form == WaveSourceForm::Derived) ? -1.0 / (c * c) : 1.0;
      hp.source_f = [u0, v0, s, scale](const Point& x) {
        double val = 0.0;
        if (u0) val += s * u0(x);
        if (v0) val += v0(x);
        return scale * val;
      };
    }
    hp.dirichlet_g = [&g_transform, s](const Point& x) { return g_transform(x, s); };
    hp.mfs = node_cfg.mfs;
    if (hp.source_f) hp.mps = node_cfg.mps;
    fields->push_back(solve_bvp(hp));
  }
  return invert_fields(std::move(plan), std::move(fields));
}

}  // namespace mhelm
