#pragma once
#include <functional>
#include <vector>

#include "mhelm/ibvp.hpp"

namespace mhelm {

// Gaver-Stehfest inversion of a Laplace transform sampled on the real axis.
// nodes[l-1] = l ln2 / t, weights are the classical alternating-sum
// coefficients. ns must be even and in [2, 20]; t > 0.
struct StehfestPlan {
  int ns = 0;
  double t = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Weights computed in exact integer/rational arithmetic, rounded once at
// return. Identity checks (sum == 0, sum of w_l/l == ln-free unity) hold
// exactly before rounding; stehfest_identity_defects reports the exact
// rational defects as doubles (both must be 0).
std::vector<double> stehfest_weights(int ns);
std::pair<double, double> stehfest_identity_defects(int ns);

StehfestPlan stehfest_plan(int ns, double t);

// (ln2 / t) * sum_l w_l * values[l-1]
double stehfest_invert(const StehfestPlan& plan, const std::vector<double>& values);

// How the wave equation's transformed source is formed.
//  Derived:  f = -(s u0 + v0) / c^2   (consistent with (Delta - (s/c)^2) U = f)
//  Legacy:   f = +(s u0 + v0)         (historical form, kept switchable)
enum class WaveSourceForm { Derived, Legacy };

// Solve the IBVP at one time t by inverting ns transformed Helmholtz
// problems. g_transform(x, s) must be the Laplace transform of the boundary
// data. Returns an evaluator over the domain.
std::function<double(const Point&)> solve_diffusion_lt(
    const IbvpProblem& problem, double t, int ns,
    const std::function<double(const Point&, double)>& g_transform,
    const HelmConfig& config);

std::function<double(const Point&)> solve_wave_lt(
    const IbvpProblem& problem, double t, int ns,
    const std::function<double(const Point&, double)>& g_transform,
    const HelmConfig& config, WaveSourceForm form = WaveSourceForm::Derived);

}  // namespace mhelm
