#include "mhelm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mhelm {

namespace {

constexpr int kStarSamples = 1024;  // angular resolution for star-domain tests

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

// Dense boundary sample of a star curve, reused by the inflation tests.
std::vector<Point> star_boundary(const Domain& d) {
  std::vector<Point> pts(kStarSamples);
  for (int i = 0; i < kStarSamples; ++i) {
    const double th = 2.0 * M_PI * i / kStarSamples;
    const double r = d.radius_fn(th);
    pts[i] = pt(r * std::cos(th), r * std::sin(th));
  }
  return pts;
}

std::vector<Point> fibonacci_sphere(const Point& center, double R, int N) {
  // Deterministic near-uniform spread: golden-angle longitudes against
  // equal-area latitudes.
  std::vector<Point> pts(N);
  const double ga = M_PI * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < N; ++k) {
    const double z = 1.0 - 2.0 * (k + 0.5) / N;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double th = ga * k;
    pts[k] = pt(center[0] + R * rho * std::cos(th), center[1] + R * rho * std::sin(th),
                center[2] + R * z);
  }
  return pts;
}

}  // namespace

Domain Domain::polar_star(std::function<double(double)> r) {
  Domain d;
  d.kind = Kind::PolarStar;
  d.dim = 2;
  d.radius_fn = std::move(r);
  for (int i = 0; i < kStarSamples; ++i) {
    if (!(d.radius_fn(2.0 * M_PI * i / kStarSamples) > 0))
      throw std::domain_error("Domain::polar_star: r(theta) must be > 0");
  }
  return d;
}

Domain Domain::disk(Point center, double radius) {
  if (!(radius > 0)) throw std::domain_error("Domain::disk: radius must be > 0");
  Domain d;
  d.kind = Kind::Disk;
  d.dim = 2;
  d.center = center;
  d.radius = radius;
  return d;
}

Domain Domain::rect(double x0, double x1, double y0, double y1) {
  if (!(x0 < x1) || !(y0 < y1)) throw std::domain_error("Domain::rect: empty range");
  Domain d;
  d.kind = Kind::Rect;
  d.dim = 2;
  d.x0 = x0;
  d.x1 = x1;
  d.y0 = y0;
  d.y1 = y1;
  return d;
}

Domain Domain::ball(Point center, double radius) {
  if (!(radius > 0)) throw std::domain_error("Domain::ball: radius must be > 0");
  Domain d;
  d.kind = Kind::Ball;
  d.dim = 3;
  d.center = center;
  d.radius = radius;
  return d;
}

SourceShape SourceShape::circle(Point center, double a) {
  if (!(a > 0)) throw std::domain_error("SourceShape::circle: radius must be > 0");
  SourceShape s;
  s.kind = Kind::Circle;
  s.center = center;
  s.radius = a;
  return s;
}

SourceShape SourceShape::polar_star(std::function<double(double)> r) {
  SourceShape s;
  s.kind = Kind::PolarStar;
  s.radius_fn = std::move(r);
  return s;
}

SourceShape SourceShape::sphere(Point center, double R) {
  if (!(R > 0)) throw std::domain_error("SourceShape::sphere: radius must be > 0");
  SourceShape s;
  s.kind = Kind::Sphere;
  s.center = center;
  s.radius = R;
  return s;
}

std::vector<Point> boundary_points(const Domain& d, int N) {
  if (N < 1) throw std::domain_error("boundary_points: N must be >= 1");
  std::vector<Point> pts;
  pts.reserve(N);
  switch (d.kind) {
    case Domain::Kind::PolarStar:
      for (int k = 0; k < N; ++k) {
        const double th = 2.0 * M_PI * k / N;
        const double r = d.radius_fn(th);
        pts.push_back(pt(r * std::cos(th), r * std::sin(th)));
      }
      break;
    case Domain::Kind::Disk:
      for (int k = 0; k < N; ++k) {
        const double th = 2.0 * M_PI * k / N;
        pts.push_back(pt(d.center[0] + d.radius * std::cos(th),
                         d.center[1] + d.radius * std::sin(th)));
      }
      break;
    case Domain::Kind::Rect: {
      // Arclength-equispaced, counterclockwise from the lexicographically
      // smallest corner (x0, y0).
      const double w = d.x1 - d.x0, h = d.y1 - d.y0;
      const double P = 2.0 * (w + h);
      for (int k = 0; k < N; ++k) {
        double s = P * k / N;
        if (s < w)
          pts.push_back(pt(d.x0 + s, d.y0));
        else if ((s -= w) < h)
          pts.push_back(pt(d.x1, d.y0 + s));
        else if ((s -= h) < w)
          pts.push_back(pt(d.x1 - s, d.y1));
        else
          pts.push_back(pt(d.x0, d.y1 - (s - w)));
      }
      break;
    }
    case Domain::Kind::Ball:
      return fibonacci_sphere(d.center, d.radius, N);
  }
  return pts;
}

std::vector<Point> source_points(const SourceShape& s, int N) {
  if (N < 1) throw std::domain_error("source_points: N must be >= 1");
  std::vector<Point> pts;
  pts.reserve(N);
  switch (s.kind) {
    case SourceShape::Kind::Circle:
      for (int k = 0; k < N; ++k) {
        const double th = 2.0 * M_PI * k / N;
        pts.push_back(pt(s.center[0] + s.radius * std::cos(th),
                         s.center[1] + s.radius * std::sin(th)));
      }
      break;
    case SourceShape::Kind::PolarStar:
      for (int k = 0; k < N; ++k) {
        const double th = 2.0 * M_PI * k / N;
        const double r = s.radius_fn(th);
        pts.push_back(pt(r * std::cos(th), r * std::sin(th)));
      }
      break;
    case SourceShape::Kind::Sphere:
      return fibonacci_sphere(s.center, s.radius, N);
  }
  return pts;
}

bool contains(const Domain& d, const Point& p) {
  switch (d.kind) {
    case Domain::Kind::Disk:
    case Domain::Kind::Ball:
      return dist(p, d.center) <= d.radius;
    case Domain::Kind::Rect:
      return p[0] >= d.x0 && p[0] <= d.x1 && p[1] >= d.y0 && p[1] <= d.y1;
    case Domain::Kind::PolarStar: {
      const double r = std::hypot(p[0], p[1]);
      if (r == 0) return true;
      return r <= d.radius_fn(std::atan2(p[1], p[0]));
    }
  }
  return false;
}

Point project_into(const Domain& d, const Point& p) {
  switch (d.kind) {
    case Domain::Kind::Rect:
      return Point{clamp(p[0], d.x0, d.x1), clamp(p[1], d.y0, d.y1), 0};
    case Domain::Kind::Disk:
    case Domain::Kind::Ball: {
      const double r = dist(p, d.center);
      if (r <= d.radius || r == 0) return p;
      const double s = d.radius / r;
      Point q = d.center;
      for (int i = 0; i < d.dim; ++i) q[i] += s * (p[i] - d.center[i]);
      return q;
    }
    case Domain::Kind::PolarStar: {
      const double r = std::hypot(p[0], p[1]);
      if (r == 0) return p;
      const double rb = d.radius_fn(std::atan2(p[1], p[0]));
      if (r <= rb) return p;
      return Point{p[0] * rb / r, p[1] * rb / r, 0};
    }
  }
  return p;
}

namespace {
// Triangle-wave fold of x into [lo, hi]; bumps `folds` when the fold lands on
// a descending segment (an odd number of wall crossings).
double fold(double x, double lo, double hi, int& folds) {
  const double L = hi - lo;
  if (L <= 0) return lo;
  double t = std::fmod(x - lo, 2 * L);
  if (t < 0) t += 2 * L;
  if (t > L) {
    ++folds;
    return lo + 2 * L - t;
  }
  return lo + t;
}

Point reflect_radial(const Point& p, const Point& center, double r, double rb, int& folds) {
  const double rr = fold(r, 0.0, rb, folds);
  Point q = center;
  for (int i = 0; i < 3; ++i) q[i] += (r > 0 ? rr / r : 0.0) * (p[i] - center[i]);
  return q;
}
}  // namespace

Point reflect_into(const Domain& d, const Point& p, bool& odd_folds) {
  int folds = 0;
  Point out = p;
  switch (d.kind) {
    case Domain::Kind::Rect:
      out = Point{fold(p[0], d.x0, d.x1, folds), fold(p[1], d.y0, d.y1, folds), 0};
      break;
    case Domain::Kind::Disk:
    case Domain::Kind::Ball: {
      const double r = dist(p, d.center);
      if (r > d.radius) out = reflect_radial(p, d.center, r, d.radius, folds);
      break;
    }
    case Domain::Kind::PolarStar: {
      const double r = std::hypot(p[0], p[1]);
      if (r > 0) {
        const double rb = d.radius_fn(std::atan2(p[1], p[0]));
        if (r > rb) out = reflect_radial(p, Point{0, 0, 0}, r, rb, folds);
      }
      break;
    }
  }
  odd_folds = (folds % 2) != 0;
  return out;
}

Point reflect_into(const Domain& d, const Point& p) {
  bool odd = false;
  return reflect_into(d, p, odd);
}

bool inflate_contains(const Domain& d, double delta, const Point& p) {
  if (!(delta >= 0)) throw std::domain_error("inflate_contains: delta must be >= 0");
  switch (d.kind) {
    case Domain::Kind::Rect:
      return p[0] >= d.x0 - delta && p[0] <= d.x1 + delta && p[1] >= d.y0 - delta &&
             p[1] <= d.y1 + delta;
    case Domain::Kind::Disk:
    case Domain::Kind::Ball: {
      // p in Omega + delta*I  iff the clamped shift moves p into the ball.
      double s = 0;
      for (int i = 0; i < d.dim; ++i) {
        const double q = p[i] - clamp(p[i] - d.center[i], -delta, delta) - d.center[i];
        s += q * q;
      }
      return s <= d.radius * d.radius;
    }
    case Domain::Kind::PolarStar: {
      if (contains(d, p)) return true;
      for (const Point& q : star_boundary(d))
        if (std::fabs(p[0] - q[0]) <= delta && std::fabs(p[1] - q[1]) <= delta) return true;
      return false;
    }
  }
  return false;
}

void bounding_box(const Domain& d, Point& lo, Point& hi) {
  switch (d.kind) {
    case Domain::Kind::Rect:
      lo = pt(d.x0, d.y0);
      hi = pt(d.x1, d.y1);
      break;
    case Domain::Kind::Disk:
    case Domain::Kind::Ball:
      for (int i = 0; i < 3; ++i) {
        lo[i] = d.center[i] - (i < d.dim ? d.radius : 0.0);
        hi[i] = d.center[i] + (i < d.dim ? d.radius : 0.0);
      }
      break;
    case Domain::Kind::PolarStar: {
      lo = pt(1e300, 1e300);
      hi = pt(-1e300, -1e300);
      for (const Point& q : star_boundary(d)) {
        lo[0] = std::min(lo[0], q[0]);
        lo[1] = std::min(lo[1], q[1]);
        hi[0] = std::max(hi[0], q[0]);
        hi[1] = std::max(hi[1], q[1]);
      }
      break;
    }
  }
}

Lattice lattice(const Domain& d, int n, double gamma, double delta,
                const std::function<double(const Point&)>& f) {
  if (n < 1) throw std::domain_error("lattice: n must be >= 1");
  if (!(delta > 0)) throw std::domain_error("lattice: delta must be > 0");
  if (!(gamma >= 0 && gamma <= 1)) throw std::domain_error("lattice: gamma must be in [0,1]");
  Lattice L;
  L.n = n;
  L.gamma = gamma;
  L.delta = delta;
  L.dim = d.dim;

  Point lo, hi;
  bounding_box(d, lo, hi);
  std::array<int, 3> jlo{0, 0, 0}, jhi{0, 0, 0};
  for (int i = 0; i < d.dim; ++i) {
    // Candidate nodes j/n covering the inflated bounding box, padded one cell.
    jlo[i] = (int)std::floor((lo[i] - delta) * n) - 1;
    jhi[i] = (int)std::ceil((hi[i] + delta) * n) + 1;
  }

  // Keep the indices whose node j/n lies in Omega_delta = Omega + delta*I.
  // The node-based test preserves every sign symmetry of the domain in the
  // node set; odd/even source terms then cancel exactly in the kernel sums,
  // which anchored-cell intersection tests break by half a cell at the rim.
  const double inv_n = 1.0 / n;
  for (int jx = jlo[0]; jx <= jhi[0]; ++jx) {
    for (int jy = jlo[1]; jy <= jhi[1]; ++jy) {
      for (int jz = jlo[2]; jz <= jhi[2]; ++jz) {
        Point node = pt(jx * inv_n, jy * inv_n, d.dim == 3 ? jz * inv_n : 0.0);
        if (!inflate_contains(d, delta, node)) continue;
        L.index.push_back({jx, jy, d.dim == 3 ? jz : 0});
        L.nodes.push_back(node);
        L.samples.push_back(f(node));
      }
    }
  }
  if (L.nodes.empty()) throw SolverError("lattice: empty index set (degenerate domain)");
  return L;
}

}  // namespace mhelm
