#pragma once
#include <functional>
#include <vector>

#include "mhelm/types.hpp"

namespace mhelm {

// Closed-form reference fields for the benchmark problems.
//
//  ref_exp_sin:     u = e^{-2x} sin y          solves (Delta - 3) u = 0
//  ref_xy_exp:      u = x y e^y                solves (Delta - 1) u = 2 x e^y
//  ref_x2y_exp_z:   u = x^2 y e^z              solves (Delta - 1) u = 2 y e^z
double ref_exp_sin(const Point& x);
double ref_xy_exp(const Point& x);
double ref_xy_exp_source(const Point& x);
double ref_x2y_exp_z(const Point& x);
double ref_x2y_exp_z_source(const Point& x);

struct SeriesSpec {
  int max_index = 400;     // highest retained mode index
  double tail_tol = 1e-12; // stop once a band's envelope falls below this
};

// Separated-variables series for u_t = k Delta u on the square
// (-0.2, 0.2)^2 with u = 1 at t = 0 and u = 0 on the boundary.
double diffusion_series(double x, double y, double t, double k,
                        const SeriesSpec& spec = {});

// Series for u_tt = Delta u on the unit square with u = 0 on the boundary,
// u(.,0) = 0 and u_t(.,0) = x y. Bands of constant m+n are accumulated with
// compensated summation; convergence is algebraic, so max_index matters.
double wave_series(double x, double y, double t, const SeriesSpec& spec = {});

struct ErrorReport {
  double max_abs = 0.0;
  std::vector<double> abs_errors;  // one per evaluation point
};

ErrorReport error_report(const std::function<double(const Point&)>& numeric,
                         const std::function<double(const Point&)>& reference,
                         const std::vector<Point>& points);

}  // namespace mhelm
