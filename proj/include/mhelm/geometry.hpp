#pragma once
#include <array>
#include <functional>
#include <vector>

#include "mhelm/types.hpp"

namespace mhelm {

// Problem domains. PolarStar is a star-shaped curve r = r(theta) about the
// origin; Rect is axis-aligned; Ball is the only 3D kind.
struct Domain {
  enum class Kind { PolarStar, Disk, Rect, Ball };
  Kind kind;
  int dim;
  std::function<double(double)> radius_fn;  // PolarStar
  Point center{0, 0, 0};
  double radius = 0;                  // Disk/Ball
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;  // Rect

  static Domain polar_star(std::function<double(double)> r);
  static Domain disk(Point center, double radius);
  static Domain rect(double x0, double x1, double y0, double y1);
  static Domain ball(Point center, double radius);
};

// Fictitious surfaces carrying the MFS sources.
struct SourceShape {
  enum class Kind { Circle, PolarStar, Sphere };
  Kind kind;
  std::function<double(double)> radius_fn;
  Point center{0, 0, 0};
  double radius = 0;

  static SourceShape circle(Point center, double a);
  static SourceShape polar_star(std::function<double(double)> r);
  static SourceShape sphere(Point center, double R);
};

// The index set I_n(Omega_delta): every multi-index j whose node j/n lies in
// the inflated domain Omega + delta*[-1,1]^s, together with the sample values
// f(j/n). The node-based membership test keeps the node set closed under the
// domain's sign symmetries (see lattice()).
struct Lattice {
  int n = 1;
  double gamma = 0.5;
  double delta = 0;
  int dim = 2;
  std::vector<std::array<int, 3>> index;
  std::vector<Point> nodes;  // j/n
  std::vector<double> samples;
};

std::vector<Point> boundary_points(const Domain& d, int N);
std::vector<Point> source_points(const SourceShape& s, int N);

bool contains(const Domain& d, const Point& p);
bool inflate_contains(const Domain& d, double delta, const Point& p);

// Nearest-point-style projection into the closed domain (exact for Rect,
// Disk, Ball; radial for PolarStar). Used to extend fields that are only
// trustworthy inside Omega when sampling on the inflated lattice.
Point project_into(const Domain& d, const Point& p);

// Reflection across the boundary (coordinate folding for Rect, radial for
// the others). Unlike project_into this preserves interior profiles, so a
// bulk-constant field stays constant under the extension. The overload
// reports whether the point crossed the boundary an odd number of times,
// which callers need to build an odd (Dirichlet image) extension.
Point reflect_into(const Domain& d, const Point& p);
Point reflect_into(const Domain& d, const Point& p, bool& odd_folds);

Lattice lattice(const Domain& d, int n, double gamma, double delta,
                const std::function<double(const Point&)>& f);

// Axis-aligned bounding box of the domain (used for lattice enumeration).
void bounding_box(const Domain& d, Point& lo, Point& hi);

}  // namespace mhelm
