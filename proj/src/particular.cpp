#include "mhelm/particular.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "mhelm/specialfn.hpp"

namespace mhelm {

namespace {

// Upper limit past which the inner integrand is numerically dead. Splits are
// clamped here before keying the cache, so every far node shares one entry
// (and for the bump, A saturates exactly at the support radius).
double split_saturation(const Rbf& rbf, double mu, const WaveNumber& kappa,
                        const QuadratureSpec& spec) {
  if (rbf.kind == Rbf::Kind::Bump) return 1.0;
  const double g = kappa.is_modified() ? mu : 0.0;
  const double c = rbf.c;
  return (g + std::sqrt(g * g + 4.0 * c * spec.tail_exponent_cutoff)) / (2.0 * c);
}

struct Kernels {
  // A = int_0^S t phi(t) grow(mu t) dt, B = int_S^inf t phi(t) decay(mu t) dt.
  // 2D: grow = I0|J0, decay = K0|H0.  3D: grow = sinh|sin, decay = e^-|e^{i.}.
  double mu;
  double sat;
  Decay tail;
};

Kernels make_kernels(const ParticularPlan& p) {
  const double mu = p.kappa.magnitude * std::pow((double)p.lattice.n, -p.lattice.gamma);
  Decay d = rbf_decay(p.rbf);
  if (d.kind == Decay::Kind::Gaussian && p.kappa.is_modified()) d.growth = mu;
  return {mu, split_saturation(p.rbf, mu, p.kappa, p.quad_spec), d};
}

IntegralCache::AB compute_ab(const ParticularPlan& p, const Kernels& K, double S) {
  const Rbf& rbf = p.rbf;
  const double mu = K.mu;
  IntegralCache::AB ab{0.0, Complex(0.0, 0.0)};
  if (p.dim == 2) {
    if (p.kappa.is_modified()) {
      ab.A = integrate([&](double t) { return t * rbf_eval(rbf, t) * bessel_i0(mu * t); }, 0.0,
                       S, p.quad_spec);
      ab.B = Complex(
          integrate_tail([&](double t) { return t * rbf_eval(rbf, t) * bessel_k0(mu * t); }, S,
                         K.tail, p.quad_spec),
          0.0);
    } else {
      ab.A = integrate([&](double t) { return t * rbf_eval(rbf, t) * bessel_j0(mu * t); }, 0.0,
                       S, p.quad_spec);
      ab.B = Complex(
          integrate_tail([&](double t) { return t * rbf_eval(rbf, t) * bessel_j0(mu * t); }, S,
                         K.tail, p.quad_spec),
          integrate_tail([&](double t) { return t * rbf_eval(rbf, t) * bessel_y0(mu * t); }, S,
                         K.tail, p.quad_spec));
    }
  } else {
    if (p.kappa.is_modified()) {
      ab.A = integrate([&](double t) { return t * rbf_eval(rbf, t) * std::sinh(mu * t); }, 0.0,
                       S, p.quad_spec);
      ab.B = Complex(
          integrate_tail([&](double t) { return t * rbf_eval(rbf, t) * std::exp(-mu * t); }, S,
                         K.tail, p.quad_spec),
          0.0);
    } else {
      ab.A = integrate([&](double t) { return t * rbf_eval(rbf, t) * std::sin(mu * t); }, 0.0, S,
                       p.quad_spec);
      ab.B = Complex(
          integrate_tail([&](double t) { return t * rbf_eval(rbf, t) * std::cos(mu * t); }, S,
                         K.tail, p.quad_spec),
          integrate_tail([&](double t) { return t * rbf_eval(rbf, t) * std::sin(mu * t); }, S,
                         K.tail, p.quad_spec));
    }
  }
  return ab;
}

IntegralCache::AB get_ab(const ParticularPlan& p, const Kernels& K, double S) {
  const double s_eff = std::min(S, K.sat);
  IntegralCache::AB ab;
  if (p.cache->lookup(s_eff, ab)) return ab;
  ab = compute_ab(p, K, s_eff);
  p.cache->store(s_eff, ab);
  return ab;
}

}  // namespace

double IntegralCache::round_key(double split) {
  if (split == 0.0 || !std::isfinite(split)) return split;
  const double mag = std::pow(10.0, 11 - (int)std::floor(std::log10(std::fabs(split))));
  return std::round(split * mag) / mag;
}

bool IntegralCache::lookup(double split, AB& out) const {
  const double key = round_key(split);
  std::lock_guard<std::mutex> g(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return false;
  out = it->second;
  return true;
}

void IntegralCache::store(double split, const AB& v) {
  const double key = round_key(split);
  std::lock_guard<std::mutex> g(mu_);
  if (map_.size() >= kMaxEntries) return;
  map_.emplace(key, v);
}

ParticularPlan make_particular_plan(Lattice lattice, const Rbf& rbf, const WaveNumber& kappa,
                                    int dim, const QuadratureSpec& spec,
                                    std::shared_ptr<IntegralCache> cache) {
  if (dim != 2 && dim != 3) throw std::domain_error("make_particular_plan: dim must be 2 or 3");
  if (lattice.dim != dim)
    throw std::domain_error("make_particular_plan: lattice dimension mismatch");
  ParticularPlan p{std::move(lattice), rbf, kappa, dim, spec,
                   cache ? std::move(cache) : std::make_shared<IntegralCache>()};
  return p;
}

double eval_fn(const ParticularPlan& plan, const Point& x) {
  const Lattice& L = plan.lattice;
  const double ng = std::pow((double)L.n, L.gamma);
  const double scale = std::pow((double)L.n, -(double)plan.dim * (1.0 - L.gamma));
  double acc = 0.0;
  for (std::size_t j = 0; j < L.nodes.size(); ++j) {
    const double fj = L.samples[j];
    if (fj == 0.0) continue;
    acc += fj * rbf_eval(plan.rbf, ng * dist(x, L.nodes[j]));
  }
  return scale * acc + plan.constant;
}

void interpolate_samples(ParticularPlan& plan, double cutoff_rel) {
  Lattice& L = plan.lattice;
  const Eigen::Index m = static_cast<Eigen::Index>(L.nodes.size());
  if (m == 0) return;
  const double ng = std::pow((double)L.n, L.gamma);
  const double scale = std::pow((double)L.n, -(double)plan.dim * (1.0 - L.gamma));
  Eigen::MatrixXd G(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    G(i, i) = scale * rbf_eval(plan.rbf, 0.0);
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double v = scale * rbf_eval(plan.rbf, ng * dist(L.nodes[i], L.nodes[j]));
      G(i, j) = v;
      G(j, i) = v;
    }
  }
  // Deflate the sample mean: the constant part has an exact analytic
  // response (see ParticularPlan::constant), and fitting it through narrow
  // kernels would put lattice-scale ripple on the evaluated field.
  double mean = 0.0;
  for (double s : L.samples) mean += s;
  mean /= (double)m;
  plan.constant += mean;
  Eigen::VectorXd b(m);
  for (Eigen::Index j = 0; j < m; ++j) b[j] = L.samples[j] - mean;
  // G is symmetric positive definite for distinct nodes; solve through its
  // eigendecomposition with Tikhonov damping scaled to the top eigenvalue:
  // each component is divided by ev + cutoff_rel * lambda_max. Components on
  // well-resolved eigendirections pass nearly unchanged while the
  // ill-conditioned tail (sub-lattice content) is shrunk smoothly; a hard
  // truncation of the tail was tried and leaves ringing in the evaluated
  // field near the boundary.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
  if (es.info() != Eigen::Success)
    throw SolverError("interpolate_samples: kernel eigensolve failed");
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  const double lam_max = ev[m - 1];
  if (!(lam_max > 0.0))
    throw SolverError("interpolate_samples: kernel matrix is not positive");
  const double damp = std::max(cutoff_rel, 0.0) * lam_max;
  Eigen::VectorXd z = es.eigenvectors().transpose() * b;
  for (Eigen::Index k = 0; k < m; ++k) {
    const double denom = std::max(ev[k], 0.0) + damp;
    z[k] = denom > 0.0 ? z[k] / denom : 0.0;
  }
  Eigen::VectorXd y = es.eigenvectors() * z;
  if (!y.allFinite())
    throw SolverError("interpolate_samples: kernel collocation matrix is singular");
  for (Eigen::Index j = 0; j < m; ++j) L.samples[j] = y[j];
}

Complex eval_un_2d(const ParticularField& field, const Point& x) {
  const ParticularPlan& p = field.plan;
  if (p.dim != 2) throw std::domain_error("eval_un_2d: plan is not 2D");
  const Lattice& L = p.lattice;
  const Kernels K = make_kernels(p);
  const double ng = std::pow((double)L.n, L.gamma);
  const double kap = p.kappa.magnitude;
  const double inv_n2 = 1.0 / ((double)L.n * (double)L.n);

  if (p.kappa.is_modified()) {
    double acc = 0.0;
    for (std::size_t j = 0; j < L.nodes.size(); ++j) {
      const double fj = L.samples[j];
      if (fj == 0.0) continue;
      const double r = dist(x, L.nodes[j]);
      const IntegralCache::AB ab = get_ab(p, K, ng * r);
      if (r == 0.0)
        acc += fj * ab.B.real();  // A vanishes, I0(0) = 1
      else
        acc += fj * (bessel_k0(kap * r) * ab.A + bessel_i0(kap * r) * ab.B.real());
    }
    // (Delta - lam^2) u = c has the exact response u = -c / lam^2.
    return Complex(-inv_n2 * acc - p.constant / (kap * kap), 0.0);
  }

  Complex acc(0.0, 0.0);
  for (std::size_t j = 0; j < L.nodes.size(); ++j) {
    const double fj = L.samples[j];
    if (fj == 0.0) continue;
    const double r = dist(x, L.nodes[j]);
    const IntegralCache::AB ab = get_ab(p, K, ng * r);
    if (r == 0.0)
      acc += fj * ab.B;  // J0(0) = 1
    else
      acc += fj * (hankel1_0(p.kappa, r) * ab.A + bessel_j0(kap * r) * ab.B);
  }
  // (Delta + kap^2) u = c has the exact response u = c / kap^2.
  return Complex(0.0, -M_PI / 2.0 * inv_n2) * acc + Complex(p.constant / (kap * kap), 0.0);
}

Complex eval_un_3d(const ParticularField& field, const Point& x) {
  const ParticularPlan& p = field.plan;
  if (p.dim != 3) throw std::domain_error("eval_un_3d: plan is not 3D");
  const Lattice& L = p.lattice;
  const Kernels K = make_kernels(p);
  const double ng = std::pow((double)L.n, L.gamma);
  const double kap = p.kappa.magnitude;
  const double pref = -std::pow((double)L.n, L.gamma - 3.0) / kap;

  if (p.kappa.is_modified()) {
    double acc = 0.0;
    for (std::size_t j = 0; j < L.nodes.size(); ++j) {
      const double fj = L.samples[j];
      if (fj == 0.0) continue;
      const double r = dist(x, L.nodes[j]);
      const IntegralCache::AB ab = get_ab(p, K, ng * r);
      if (r == 0.0)
        acc += fj * kap * ab.B.real();  // sinh(lam r)/r -> lam, A/r -> 0
      else
        acc += fj * (std::exp(-kap * r) * ab.A + std::sinh(kap * r) * ab.B.real()) / r;
    }
    return Complex(pref * acc - p.constant / (kap * kap), 0.0);
  }

  Complex acc(0.0, 0.0);
  for (std::size_t j = 0; j < L.nodes.size(); ++j) {
    const double fj = L.samples[j];
    if (fj == 0.0) continue;
    const double r = dist(x, L.nodes[j]);
    const IntegralCache::AB ab = get_ab(p, K, ng * r);
    if (r == 0.0)
      acc += fj * kap * ab.B;  // sin(k r)/r -> k
    else
      acc += fj * (Complex(std::cos(kap * r), std::sin(kap * r)) * ab.A +
                   std::sin(kap * r) * ab.B) /
             r;
  }
  return pref * acc + Complex(p.constant / (kap * kap), 0.0);
}

double eval_un(const ParticularField& field, const Point& x) {
  return (field.plan.dim == 2 ? eval_un_2d(field, x) : eval_un_3d(field, x)).real();
}

}  // namespace mhelm
