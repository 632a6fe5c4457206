#include "mhelm/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mhelm/analytic.hpp"
#include "mhelm/config.hpp"
#include "mhelm/drm.hpp"
#include "mhelm/stehfest.hpp"
#include "mhelm/tables.hpp"
#include "mhelm/threading.hpp"
#include "mhelm/timestep.hpp"
#include "mhelm/version.hpp"

namespace mhelm {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

using FieldFn = std::function<double(const Point&)>;
using TimeFieldFn = std::function<double(const Point&, double)>;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void apply_threads(const CliOptions& opts) {
  int t = opts.threads;
  if (t < 0) {
    const char* env = std::getenv("MESHLESS_HELM_THREADS");
    t = env ? std::atoi(env) : 0;
  }
  set_thread_budget(t < 0 ? 0 : t);
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::filesystem::path p = std::filesystem::path(dir) / name;
  std::ofstream out(p, std::ios::binary);
  if (!out) throw SolverError("cannot open output file: " + p.string());
  return out;
}

void write_run_meta(const std::string& dir, const std::string& config_hash,
                    double wall_seconds) {
  auto out = open_out(dir, "run_meta");
  out << "config_hash=" << config_hash << "\n";
  out << "wall_time_seconds=" << fmt(wall_seconds) << "\n";
  static const char* kModules[] = {"specialfn", "quad", "geometry", "rbf",
                                   "particular", "mfs", "drm", "stehfest",
                                   "timestep", "analytic", "cli"};
  for (const char* m : kModules) out << "version." << m << "=" << kVersion << "\n";
}

// ---------------------------------------------------------------------------
// Named fields available to configs.

FieldFn named_field(const std::string& name, const std::string& where) {
  if (name == "zero") return [](const Point&) { return 0.0; };
  if (name == "one") return [](const Point&) { return 1.0; };
  if (name == "xy") return [](const Point& p) { return p[0] * p[1]; };
  if (name == "exp_sin") return ref_exp_sin;
  if (name == "xy_exp") return ref_xy_exp;
  if (name == "xy_exp_source") return ref_xy_exp_source;
  if (name == "x2y_exp_z") return ref_x2y_exp_z;
  if (name == "x2y_exp_z_source") return ref_x2y_exp_z_source;
  throw ConfigError(where + ": unknown field '" + name +
                    "' (known: zero, one, xy, exp_sin, xy_exp, xy_exp_source, "
                    "x2y_exp_z, x2y_exp_z_source)");
}

TimeFieldFn named_time_field(const std::string& name, const std::string& where) {
  if (name == "zero") return [](const Point&, double) { return 0.0; };
  if (name == "one") return [](const Point&, double) { return 1.0; };
  throw ConfigError(where + ": unknown time-dependent field '" + name +
                    "' (known: zero, one)");
}

TimeFieldFn named_transform(const std::string& name, const std::string& where) {
  if (name == "zero") return [](const Point&, double) { return 0.0; };
  if (name == "inv_s") return [](const Point&, double s) { return 1.0 / s; };
  if (name == "neg_inv_s") return [](const Point&, double s) { return -1.0 / s; };
  throw ConfigError(where + ": unknown transform '" + name +
                    "' (known: zero, inv_s, neg_inv_s)");
}

// ---------------------------------------------------------------------------
// Config -> solver objects.

Domain domain_from(const Config& cfg) {
  const std::string kind = cfg.require_string("domain", "kind");
  if (kind == "star") {
    const double base = cfg.require_double("domain", "base");
    const double amp = cfg.get_double("domain", "cos_amp", 0.0);
    const double freq = cfg.get_double("domain", "cos_freq", 0.0);
    return Domain::polar_star(
        [base, amp, freq](double th) { return base + amp * std::cos(freq * th); });
  }
  if (kind == "disk") {
    auto centers = cfg.has("domain", "center") ? cfg.get_points("domain", "center")
                                               : std::vector<Point>{pt(0, 0)};
    return Domain::disk(centers.front(), cfg.require_double("domain", "radius"));
  }
  if (kind == "rect")
    return Domain::rect(cfg.require_double("domain", "x0"), cfg.require_double("domain", "x1"),
                        cfg.require_double("domain", "y0"), cfg.require_double("domain", "y1"));
  if (kind == "ball") {
    auto centers = cfg.has("domain", "center") ? cfg.get_points("domain", "center")
                                               : std::vector<Point>{pt(0, 0, 0)};
    return Domain::ball(centers.front(), cfg.require_double("domain", "radius"));
  }
  throw ConfigError(cfg.locate("domain", "kind") + ": unknown domain kind '" + kind +
                    "' (known: star, disk, rect, ball)");
}

SourceShape source_shape_from(const Config& cfg) {
  const std::string kind = cfg.get_string("mfs", "source_kind", "circle");
  Point center = pt(0, 0, 0);
  if (cfg.has("mfs", "source_center")) center = cfg.get_points("mfs", "source_center").front();
  if (kind == "circle") return SourceShape::circle(center, cfg.require_double("mfs", "source_radius"));
  if (kind == "sphere") return SourceShape::sphere(center, cfg.require_double("mfs", "source_radius"));
  if (kind == "star") {
    const double base = cfg.require_double("mfs", "source_base");
    const double amp = cfg.get_double("mfs", "source_cos_amp", 0.0);
    const double freq = cfg.get_double("mfs", "source_cos_freq", 0.0);
    return SourceShape::polar_star(
        [base, amp, freq](double th) { return base + amp * std::cos(freq * th); });
  }
  throw ConfigError(cfg.locate("mfs", "source_kind") + ": unknown source kind '" + kind +
                    "' (known: circle, star, sphere)");
}

MfsConfig mfs_from(const Config& cfg, const CliOptions& opts) {
  MfsConfig m;
  m.N = cfg.require_int("mfs", "N");
  if (m.N < 1)
    throw ConfigError(cfg.locate("mfs", "N") + ": N must be >= 1, got " + std::to_string(m.N));
  m.shape = source_shape_from(cfg);
  m.regularization = cfg.get_double("mfs", "regularization", 0.0);
  if (opts.reg_set) m.regularization = opts.reg;
  return m;
}

std::optional<MpsConfig> mps_from(const Config& cfg) {
  if (!cfg.sections().count("mps")) return std::nullopt;
  MpsConfig m;
  const std::string rbf = cfg.get_string("mps", "rbf", "gaussian");
  if (rbf == "gaussian")
    m.rbf = Rbf::gaussian(cfg.require_double("mps", "c"));
  else if (rbf == "bump")
    m.rbf = Rbf::bump();
  else
    throw ConfigError(cfg.locate("mps", "rbf") + ": unknown rbf '" + rbf +
                      "' (known: gaussian, bump)");
  m.n = cfg.require_int("mps", "n");
  if (m.n < 1) throw ConfigError(cfg.locate("mps", "n") + ": n must be >= 1");
  m.gamma = cfg.get_double("mps", "gamma", 0.5);
  m.delta = cfg.get_double("mps", "delta", 0.1);
  return m;
}

std::vector<Point> eval_points_from(const Config& cfg, const Domain& domain) {
  std::vector<Point> pts;
  if (cfg.has("eval", "points")) pts = cfg.get_points("eval", "points");
  const int nb = cfg.get_int("eval", "boundary_points", 0);
  if (nb > 0) {
    auto bp = boundary_points(domain, nb);
    pts.insert(pts.end(), bp.begin(), bp.end());
  }
  if (pts.empty())
    throw ConfigError(cfg.origin() +
                      ": [eval] must provide 'points' and/or a positive 'boundary_points'");
  return pts;
}

TimeScheme::LambdaConvention convention_from(const CliOptions& opts) {
  if (opts.lambda_convention == "pde") return TimeScheme::LambdaConvention::Pde;
  if (opts.lambda_convention == "paper") return TimeScheme::LambdaConvention::Legacy;
  throw ConfigError("--lambda-convention must be 'pde' or 'paper', got '" +
                    opts.lambda_convention + "'");
}

WaveSourceForm sign_from(const CliOptions& opts) {
  if (opts.stehfest_sign == "derived") return WaveSourceForm::Derived;
  if (opts.stehfest_sign == "paper") return WaveSourceForm::Legacy;
  throw ConfigError("--stehfest-sign must be 'derived' or 'paper', got '" +
                    opts.stehfest_sign + "'");
}

// ---------------------------------------------------------------------------
// The configured pipeline behind `solve`.

struct SolveOutput {
  int dim = 2;
  std::vector<Point> points;
  std::vector<double> values;
  std::optional<std::vector<double>> reference;
};

SolveOutput run_configured(const Config& cfg, const CliOptions& opts) {
  const std::string kind = cfg.require_string("problem", "kind");
  Domain domain = domain_from(cfg);
  MfsConfig mfs = mfs_from(cfg, opts);
  std::optional<MpsConfig> mps = mps_from(cfg);

  SolveOutput out;
  out.dim = domain.dim;
  out.points = eval_points_from(cfg, domain);

  FieldFn evaluator;
  FieldFn reference;
  const std::string ref_name = cfg.get_string("problem", "reference", "none");

  if (kind == "helmholtz") {
    HelmholtzProblem hp;
    hp.domain = domain;
    const std::string eq = cfg.get_string("problem", "equation", "modified");
    if (eq == "modified")
      hp.kappa = WaveNumber::modified(cfg.require_double("problem", "lambda"));
    else if (eq == "oscillatory")
      hp.kappa = WaveNumber::oscillatory(cfg.require_double("problem", "kappa"));
    else
      throw ConfigError(cfg.locate("problem", "equation") +
                        ": equation must be 'modified' or 'oscillatory'");
    const std::string source = cfg.get_string("problem", "source", "none");
    if (source != "none") {
      hp.source_f = named_field(source, cfg.locate("problem", "source"));
      if (!mps)
        throw ConfigError(cfg.origin() +
                          ": a non-zero source requires an [mps] section");
      hp.mps = mps;
    }
    hp.dirichlet_g =
        named_field(cfg.require_string("problem", "boundary"), cfg.locate("problem", "boundary"));
    hp.mfs = mfs;
    SolutionField field = solve_bvp(hp);
    evaluator = [field](const Point& x) { return eval(field, x); };
    if (ref_name != "none") reference = named_field(ref_name, cfg.locate("problem", "reference"));
  } else if (kind == "diffusion_transform" || kind == "wave_transform") {
    const bool diffusion = (kind == "diffusion_transform");
    IbvpProblem p;
    p.kind = diffusion ? IbvpProblem::Kind::Diffusion : IbvpProblem::Kind::Wave;
    p.coefficient = diffusion ? cfg.require_double("problem", "k")
                              : cfg.get_double("problem", "c", 1.0);
    p.domain = domain;
    const std::string u0 = cfg.get_string("problem", "u0", "none");
    if (u0 != "none") p.u0 = named_field(u0, cfg.locate("problem", "u0"));
    const std::string v0 = cfg.get_string("problem", "v0", "none");
    if (v0 != "none") p.v0 = named_field(v0, cfg.locate("problem", "v0"));
    const double t = cfg.require_double("problem", "t");
    const int ns = cfg.require_int("problem", "ns");
    auto g_lt = named_transform(cfg.require_string("problem", "g_transform"),
                                cfg.locate("problem", "g_transform"));
    const double shift = cfg.get_double("problem", "shift", 0.0);
    HelmConfig hc{mfs, mps};
    FieldFn base = diffusion ? solve_diffusion_lt(p, t, ns, g_lt, hc)
                             : solve_wave_lt(p, t, ns, g_lt, hc, sign_from(opts));
    evaluator = [base, shift](const Point& x) { return base(x) + shift; };
    if (ref_name == "diffusion_series") {
      const double k = p.coefficient;
      reference = [t, k](const Point& x) { return diffusion_series(x[0], x[1], t, k); };
    } else if (ref_name == "wave_series") {
      reference = [t](const Point& x) { return wave_series(x[0], x[1], t); };
    } else if (ref_name != "none") {
      reference = named_field(ref_name, cfg.locate("problem", "reference"));
    }
  } else if (kind == "diffusion_march" || kind == "wave_march") {
    const bool diffusion = (kind == "diffusion_march");
    IbvpProblem p;
    p.kind = diffusion ? IbvpProblem::Kind::Diffusion : IbvpProblem::Kind::Wave;
    p.coefficient = diffusion ? cfg.require_double("problem", "k")
                              : cfg.get_double("problem", "c", 1.0);
    p.domain = domain;
    const std::string u0 = cfg.get_string("problem", "u0", "none");
    if (u0 != "none") p.u0 = named_field(u0, cfg.locate("problem", "u0"));
    const std::string v0 = cfg.get_string("problem", "v0", "none");
    if (v0 != "none") p.v0 = named_field(v0, cfg.locate("problem", "v0"));
    p.g = named_time_field(cfg.get_string("problem", "g", "zero"),
                           cfg.locate("problem", "g"));
    const double T = cfg.require_double("problem", "T");
    const int M = cfg.require_int("problem", "M");
    if (M < 1) throw ConfigError(cfg.locate("problem", "M") + ": M must be >= 1");
    TimeScheme scheme;
    scheme.kind = diffusion ? TimeScheme::Kind::BackwardEulerDiffusion
                            : TimeScheme::Kind::CentralWave;
    scheme.tau = T / M;
    scheme.steps = M;
    scheme.convention = convention_from(opts);
    HelmConfig hc{mfs, mps};
    auto fields = diffusion ? march_diffusion(p, scheme, hc) : march_wave(p, scheme, hc);
    SolutionField last = fields.back();
    evaluator = [last](const Point& x) { return eval(last, x); };
    if (ref_name == "diffusion_series") {
      const double k = p.coefficient;
      reference = [T, k](const Point& x) { return diffusion_series(x[0], x[1], T, k); };
    } else if (ref_name == "wave_series") {
      reference = [T](const Point& x) { return wave_series(x[0], x[1], T); };
    } else if (ref_name != "none") {
      reference = named_field(ref_name, cfg.locate("problem", "reference"));
    }
  } else {
    throw ConfigError(cfg.locate("problem", "kind") + ": unknown problem kind '" + kind +
                      "' (known: helmholtz, diffusion_transform, wave_transform, "
                      "diffusion_march, wave_march)");
  }

  out.values.reserve(out.points.size());
  for (const Point& x : out.points) out.values.push_back(evaluator(x));
  if (reference) {
    out.reference.emplace();
    out.reference->reserve(out.points.size());
    for (const Point& x : out.points) out.reference->push_back(reference(x));
  }
  return out;
}

void write_solution_csv(const std::string& dir, const SolveOutput& s) {
  auto out = open_out(dir, "solution.csv");
  out << (s.dim == 3 ? "x,y,z,value\n" : "x,y,value\n");
  for (size_t i = 0; i < s.points.size(); ++i) {
    const Point& p = s.points[i];
    out << fmt(p[0]) << "," << fmt(p[1]) << ",";
    if (s.dim == 3) out << fmt(p[2]) << ",";
    out << fmt(s.values[i]) << "\n";
  }
}

double write_errors_csv(const std::string& dir, const SolveOutput& s) {
  auto out = open_out(dir, "errors.csv");
  out << (s.dim == 3 ? "x,y,z,numeric,reference,abs_error\n"
                     : "x,y,numeric,reference,abs_error\n");
  double max_abs = 0.0;
  for (size_t i = 0; i < s.points.size(); ++i) {
    const Point& p = s.points[i];
    const double err = std::abs(s.values[i] - (*s.reference)[i]);
    if (err > max_abs) max_abs = err;
    out << fmt(p[0]) << "," << fmt(p[1]) << ",";
    if (s.dim == 3) out << fmt(p[2]) << ",";
    out << fmt(s.values[i]) << "," << fmt((*s.reference)[i]) << "," << fmt(err) << "\n";
  }
  return max_abs;
}

}  // namespace

std::vector<Point> disk_spiral_points(int interior, int boundary) {
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(interior + boundary));
  for (int i = 0; i < interior; ++i) {
    const double th =
        2.0 * kPi + 2.0 * kPi * static_cast<double>(i) / std::max(1, interior - 1);
    const double r = th / 14.0;
    pts.push_back(pt(r * std::cos(th), r * std::sin(th)));
  }
  for (int i = 0; i < boundary; ++i) {
    const double th = 2.0 * kPi * static_cast<double>(i) / boundary;
    pts.push_back(pt(std::cos(th), std::sin(th)));
  }
  return pts;
}

std::vector<Point> heat_probe_points() {
  return {pt(-0.01, 0.07), pt(-0.01, 0.04), pt(-0.01, 0.01),
          pt(-0.01, -0.01), pt(-0.01, -0.04), pt(-0.01, -0.07)};
}

std::vector<Point> wave_probe_points() {
  return {pt(0.14, 0.35), pt(0.29, 0.35), pt(0.43, 0.35),
          pt(0.57, 0.35), pt(0.71, 0.35), pt(0.86, 0.35)};
}

int cmd_solve(const std::string& config_path, const CliOptions& opts) {
  Timer timer;
  try {
    apply_threads(opts);
    Config cfg = Config::parse_file(config_path);
    const std::string dir = cfg.get_string("output", "dir", opts.out_dir);
    // --out always wins over the config's output dir.
    const std::string out_dir = (opts.out_dir != ".") ? opts.out_dir : dir;
    SolveOutput s = run_configured(cfg, opts);
    write_solution_csv(out_dir, s);
    if (s.reference) {
      const double max_abs = write_errors_csv(out_dir, s);
      std::cout << "max_abs = " << fmt(max_abs) << "\n";
    }
    const double wall = timer.seconds();
    std::cout << "wall_time_seconds = " << fmt(wall) << "\n";
    write_run_meta(out_dir, cfg.content_hash(), wall);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  }
}

// ---------------------------------------------------------------------------
// bench: recompute every published table cell and diff side by side.

namespace {

struct ComputedTable {
  const PublishedTable* pub;
  std::vector<double> ours;  // row-major, same shape as pub->values
};

void write_bench_csv(const std::string& dir, const ComputedTable& t) {
  auto out = open_out(dir, "bench_" + t.pub->id + ".csv");
  out << "row,col,value,paper_value\n";
  const size_t ncols = t.pub->cols.size();
  for (size_t r = 0; r < t.pub->rows.size(); ++r)
    for (size_t c = 0; c < ncols; ++c)
      out << t.pub->rows[r] << "," << t.pub->cols[c] << ","
          << fmt(t.ours[r * ncols + c]) << "," << fmt(t.pub->at(r, c)) << "\n";
}

void write_plot_data(const std::string& dir, const std::string& example_id,
                     const std::vector<ComputedTable>& tables) {
  auto out = open_out(dir, "bench_" + example_id + "_plot.dat");
  for (const auto& t : tables) {
    std::string cols;
    for (const auto& c : t.pub->cols) cols += " " + c;
    const size_t ncols = t.pub->cols.size();
    for (size_t r = 0; r < t.pub->rows.size(); ++r) {
      out << "# " << t.pub->id << " " << t.pub->rows[r] << " (cols:" << cols << ")\n";
      for (size_t c = 0; c < ncols; ++c)
        out << (c + 1) << " " << fmt(t.ours[r * ncols + c]) << "\n";
      out << "\n";
    }
  }
}

double max_cell_diff(const ComputedTable& t) {
  double m = 0.0;
  for (size_t i = 0; i < t.ours.size(); ++i)
    m = std::max(m, std::abs(t.ours[i] - t.pub->values[i]));
  return m;
}

// --- example 5.1: homogeneous 2D star domain -------------------------------

struct Ex51Result {
  double boundary = 0.0, center = 0.0, lower = 0.0, upper = 0.0;
};

Ex51Result run_51(double a, int N, double reg) {
  HelmholtzProblem hp;
  hp.domain = Domain::polar_star(
      [](double th) { return 1.0 - std::cos(4.0 * th) / 3.0; });
  hp.kappa = WaveNumber::modified(std::sqrt(3.0));
  hp.dirichlet_g = ref_exp_sin;
  hp.mfs.N = N;
  hp.mfs.shape = SourceShape::circle(pt(0, 0), a);
  hp.mfs.regularization = reg;
  SolutionField f = solve_bvp(hp);

  Ex51Result r;
  for (const Point& z : boundary_points(hp.domain, 150))
    r.boundary = std::max(r.boundary, std::abs(eval(f, z) - ref_exp_sin(z)));
  auto point_err = [&](Point z) { return std::abs(eval(f, z) - ref_exp_sin(z)); };
  r.center = point_err(pt(0, 0));
  r.lower = point_err(pt(-0.5, -0.5));
  r.upper = point_err(pt(0.5, 0.5));
  return r;
}

std::vector<ComputedTable> bench_51(double reg) {
  const std::vector<double> as = {5, 6, 7};
  const std::vector<int> Ns = {30, 40, 50};
  std::vector<Ex51Result> results;
  for (double a : as)
    for (int N : Ns) results.push_back(run_51(a, N, reg));
  std::vector<ComputedTable> tables;
  for (const char* id : {"5.1_boundary", "5.1_interior_(0,0)",
                         "5.1_interior_(-0.5,-0.5)", "5.1_interior_(0.5,0.5)"}) {
    ComputedTable t{&published_table(id), {}};
    t.ours.reserve(9);
    for (const auto& res : results) {
      if (std::string(id) == "5.1_boundary") t.ours.push_back(res.boundary);
      else if (std::string(id) == "5.1_interior_(0,0)") t.ours.push_back(res.center);
      else if (std::string(id) == "5.1_interior_(-0.5,-0.5)") t.ours.push_back(res.lower);
      else t.ours.push_back(res.upper);
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

// --- example 5.2: source 2 x e^y on the unit disk ---------------------------

double run_52(const Rbf& rbf, int n, double delta, int N, double reg,
              const std::shared_ptr<IntegralCache>& cache) {
  HelmholtzProblem hp;
  hp.domain = Domain::disk(pt(0, 0), 1.0);
  hp.kappa = WaveNumber::modified(1.0);
  hp.source_f = ref_xy_exp_source;
  hp.dirichlet_g = ref_xy_exp;
  hp.mfs.N = N;
  hp.mfs.shape = SourceShape::polar_star(
      [](double th) { return 5.0 - std::cos(6.0 * th); });
  hp.mfs.regularization = reg;
  hp.mps.emplace();
  hp.mps->rbf = rbf;
  hp.mps->n = n;
  hp.mps->delta = delta;
  hp.mps->cache = cache;
  SolutionField f = solve_bvp(hp);
  double err = 0.0;
  for (const Point& z : disk_spiral_points(350, 100))
    err = std::max(err, std::abs(eval(f, z) - ref_xy_exp(z)));
  return err;
}

std::vector<ComputedTable> bench_52(double reg) {
  const std::vector<int> Ns = {30, 40, 50};
  std::vector<ComputedTable> tables;

  auto fill = [&](const char* id, auto row_params, auto make) {
    ComputedTable t{&published_table(id), {}};
    for (const auto& rp : row_params) {
      // One cache per row: the kernel/RBF pair is fixed along the N columns.
      auto cache = std::make_shared<IntegralCache>();
      for (int N : Ns) t.ours.push_back(make(rp, N, cache));
    }
    tables.push_back(std::move(t));
  };

  fill("5.2_gaussian_n14", std::vector<double>{3.77, 3.8, 3.82},
       [&](double c, int N, const std::shared_ptr<IntegralCache>& cache) {
         return run_52(Rbf::gaussian(c), 14, 0.2, N, reg, cache);
       });
  fill("5.2_gaussian_n24", std::vector<double>{4.0, 4.2, 4.4},
       [&](double c, int N, const std::shared_ptr<IntegralCache>& cache) {
         return run_52(Rbf::gaussian(c), 24, 0.1, N, reg, cache);
       });
  fill("5.2_bump", std::vector<int>{16, 30, 50},
       [&](int n, int N, const std::shared_ptr<IntegralCache>& cache) {
         return run_52(Rbf::bump(), n, 0.2, N, reg, cache);
       });
  return tables;
}

// --- example 5.3: 3D unit ball ----------------------------------------------

struct Ex53Result {
  double boundary = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;
};

Ex53Result run_53(int n, int N, double reg,
                  const std::shared_ptr<IntegralCache>& cache) {
  HelmholtzProblem hp;
  hp.domain = Domain::ball(pt(0, 0, 0), 1.0);
  hp.kappa = WaveNumber::modified(1.0);
  hp.source_f = ref_x2y_exp_z_source;
  hp.dirichlet_g = ref_x2y_exp_z;
  hp.mfs.N = N;
  hp.mfs.shape = SourceShape::sphere(pt(0, 0, 0), 4.0);
  hp.mfs.regularization = reg;
  hp.mps.emplace();
  hp.mps->rbf = Rbf::gaussian(0.1);
  hp.mps->n = n;
  hp.mps->delta = 0.2;
  hp.mps->cache = cache;
  SolutionField f = solve_bvp(hp);

  Ex53Result r;
  for (const Point& z : boundary_points(hp.domain, 686))
    r.boundary = std::max(r.boundary, std::abs(eval(f, z) - ref_x2y_exp_z(z)));
  auto point_err = [&](Point z) { return std::abs(eval(f, z) - ref_x2y_exp_z(z)); };
  r.p1 = point_err(pt(0.26, 0, -0.15));
  r.p2 = point_err(pt(0.26, 0, 0.15));
  r.p3 = point_err(pt(0, 0, 0.3));
  return r;
}

std::vector<ComputedTable> bench_53(double reg) {
  const std::vector<int> ns = {5, 10, 20};
  const std::vector<int> Ns = {155, 176, 203};
  std::vector<Ex53Result> results;
  for (int n : ns) {
    auto cache = std::make_shared<IntegralCache>();  // kernel fixed, share per row
    for (int N : Ns) results.push_back(run_53(n, N, reg, cache));
  }
  std::vector<ComputedTable> tables;
  const std::pair<const char*, double Ex53Result::*> plan[] = {
      {"5.3_boundary", &Ex53Result::boundary},
      {"5.3_interior_(0.26,0,-0.15)", &Ex53Result::p1},
      {"5.3_interior_(0.26,0,0.15)", &Ex53Result::p2},
      {"5.3_interior_(0,0,0.3)", &Ex53Result::p3},
  };
  for (const auto& [id, member] : plan) {
    ComputedTable t{&published_table(id), {}};
    for (const auto& res : results) t.ours.push_back(res.*member);
    tables.push_back(std::move(t));
  }
  return tables;
}

// --- examples 5.4/5.5: diffusion on the square ------------------------------

constexpr double kHeatK = 5.8e-7;
constexpr double kHeatT = 9000.0;

IbvpProblem heat_problem() {
  IbvpProblem p;
  p.kind = IbvpProblem::Kind::Diffusion;
  p.coefficient = kHeatK;
  p.domain = Domain::rect(-0.2, 0.2, -0.2, 0.2);
  return p;
}

MfsConfig heat_mfs(int N, double reg) {
  MfsConfig m;
  m.N = N;
  m.shape = SourceShape::circle(pt(0, 0), 2.0);
  m.regularization = reg;
  return m;
}

// One table: rows = probe points, cols = true/numerical/error.
ComputedTable heat_table(const char* id, const FieldFn& numeric) {
  ComputedTable t{&published_table(id), {}};
  for (const Point& p : heat_probe_points()) {
    const double truth = diffusion_series(p[0], p[1], kHeatT, kHeatK);
    const double num = numeric(p);
    t.ours.push_back(truth);
    t.ours.push_back(num);
    t.ours.push_back(std::abs(truth - num));
  }
  return t;
}

std::vector<ComputedTable> bench_54(double reg, const std::vector<int>& ns_list) {
  std::vector<ComputedTable> tables;
  for (int ns : ns_list) {
    // Change of variable: the shifted state starts at zero, so each transform
    // node is a pure boundary problem with data -1/s; add the unit back after
    // inversion.
    IbvpProblem p = heat_problem();
    HelmConfig hc{heat_mfs(40, reg), std::nullopt};
    auto base = solve_diffusion_lt(
        p, kHeatT, ns, [](const Point&, double s) { return -1.0 / s; }, hc);
    FieldFn numeric = [base](const Point& x) { return base(x) + 1.0; };
    tables.push_back(heat_table(ns == 10 ? "5.4_ns10" : "5.4_ns18", numeric));
  }
  return tables;
}

std::vector<ComputedTable> bench_55(double reg, const std::vector<int>& M_list,
                                    TimeScheme::LambdaConvention conv) {
  std::vector<ComputedTable> tables;
  for (int M : M_list) {
    IbvpProblem p = heat_problem();
    p.u0 = [](const Point&) { return 1.0; };
    p.g = [](const Point&, double) { return 0.0; };
    TimeScheme scheme;
    scheme.kind = TimeScheme::Kind::BackwardEulerDiffusion;
    scheme.tau = kHeatT / M;
    scheme.steps = M;
    scheme.convention = conv;
    HelmConfig hc{heat_mfs(40, reg), MpsConfig{}};
    hc.mps->rbf = Rbf::gaussian(3.0);
    hc.mps->n = 14;
    hc.mps->delta = 0.2;
    auto fields = march_diffusion(p, scheme, hc);
    SolutionField last = fields.back();
    FieldFn numeric = [last](const Point& x) { return eval(last, x); };
    tables.push_back(heat_table(M == 10 ? "5.5_M10" : "5.5_M30", numeric));
  }
  return tables;
}

// --- examples 5.6/5.7: wave on the unit square ------------------------------

IbvpProblem wave_problem() {
  IbvpProblem p;
  p.kind = IbvpProblem::Kind::Wave;
  p.coefficient = 1.0;
  p.domain = Domain::rect(0, 1, 0, 1);
  p.v0 = [](const Point& x) { return x[0] * x[1]; };
  p.g = [](const Point&, double) { return 0.0; };
  return p;
}

MfsConfig wave_mfs(int N, double reg) {
  MfsConfig m;
  m.N = N;
  m.shape = SourceShape::circle(pt(0.5, 0.5), 1.2);
  m.regularization = reg;
  return m;
}

ComputedTable wave_table(const char* id, const std::vector<double>& Ts,
                         const std::function<FieldFn(double)>& solve_at) {
  ComputedTable t{&published_table(id), {}};
  std::vector<FieldFn> fns;
  for (double T : Ts) fns.push_back(solve_at(T));
  for (const Point& p : wave_probe_points())
    for (size_t c = 0; c < Ts.size(); ++c)
      t.ours.push_back(std::abs(wave_series(p[0], p[1], Ts[c]) - fns[c](p)));
  return t;
}

std::vector<ComputedTable> bench_56(double reg, const std::vector<int>& N_list,
                                    WaveSourceForm form) {
  std::vector<ComputedTable> tables;
  for (int N : N_list) {
    auto solve_at = [reg, N, form](double T) -> FieldFn {
      IbvpProblem p = wave_problem();
      HelmConfig hc{wave_mfs(N, reg), MpsConfig{}};
      hc.mps->rbf = Rbf::gaussian(10.0);
      hc.mps->n = 16;
      hc.mps->delta = 0.1;
      return solve_wave_lt(
          p, T, 10, [](const Point&, double) { return 0.0; }, hc, form);
    };
    tables.push_back(wave_table(N == 29 ? "5.6_N29" : "5.6_N37", {15, 20}, solve_at));
  }
  return tables;
}

std::vector<ComputedTable> bench_57(double reg,
                                    const std::vector<std::pair<int, int>>& NM_list) {
  std::vector<ComputedTable> tables;
  for (auto [N, M] : NM_list) {
    auto solve_at = [reg, N, M](double T) -> FieldFn {
      IbvpProblem p = wave_problem();
      TimeScheme scheme;
      scheme.kind = TimeScheme::Kind::CentralWave;
      scheme.tau = T / M;
      scheme.steps = M;
      HelmConfig hc{wave_mfs(N, reg), MpsConfig{}};
      hc.mps->rbf = Rbf::gaussian(3.0);
      hc.mps->n = 14;
      hc.mps->delta = 0.2;
      auto fields = march_wave(p, scheme, hc);
      SolutionField last = fields.back();
      return [last](const Point& x) { return eval(last, x); };
    };
    const std::string id = "5.7_N" + std::to_string(N) + "_M" + std::to_string(M);
    tables.push_back(wave_table(id.c_str(), {5, 15}, solve_at));
  }
  return tables;
}

// Grid filters: `--N 157 --M 15` keeps only tables whose id carries those
// parameter tokens (e.g. "5.7_N157_M15").
bool keep_table(const std::string& id, const std::map<std::string, std::string>& ov) {
  for (const auto& [k, v] : ov) {
    if (k != "N" && k != "M" && k != "ns" && k != "T" && k != "n" && k != "c") continue;
    const std::string token = k + v;
    if (id.find(token) == std::string::npos) return false;
  }
  return true;
}

template <typename T>
std::vector<T> parse_filter(const std::map<std::string, std::string>& ov,
                            const std::string& key, std::vector<T> all) {
  auto it = ov.find(key);
  if (it == ov.end()) return all;
  const double want = std::stod(it->second);
  std::vector<T> out;
  for (const T& v : all)
    if (static_cast<double>(v) == want) out.push_back(v);
  if (out.empty())
    throw ConfigError("override --" + key + " " + it->second +
                      " matches no benchmark configuration");
  return out;
}

}  // namespace

int cmd_bench(const std::string& example_id, const CliOptions& opts) {
  Timer timer;
  try {
    apply_threads(opts);
    const double reg = opts.reg_set ? opts.reg : 0.0;
    std::vector<ComputedTable> tables;
    if (example_id == "5.1") {
      tables = bench_51(reg);
    } else if (example_id == "5.2") {
      tables = bench_52(reg);
    } else if (example_id == "5.3") {
      tables = bench_53(reg);
    } else if (example_id == "5.4") {
      tables = bench_54(reg, parse_filter(opts.overrides, "ns", std::vector<int>{10, 18}));
    } else if (example_id == "5.5") {
      tables = bench_55(reg, parse_filter(opts.overrides, "M", std::vector<int>{10, 30}),
                        convention_from(opts));
    } else if (example_id == "5.6") {
      tables = bench_56(reg, parse_filter(opts.overrides, "N", std::vector<int>{29, 37}),
                        sign_from(opts));
    } else if (example_id == "5.7") {
      std::vector<std::pair<int, int>> grid = {{21, 15}, {157, 10}, {157, 15}};
      std::vector<std::pair<int, int>> kept;
      for (auto nm : grid) {
        const std::string id = "5.7_N" + std::to_string(nm.first) + "_M" +
                               std::to_string(nm.second);
        if (keep_table(id, opts.overrides)) kept.push_back(nm);
      }
      if (kept.empty())
        throw ConfigError("overrides match no benchmark configuration for 5.7");
      tables = bench_57(reg, kept);
    } else {
      throw ConfigError("unknown benchmark id '" + example_id +
                        "' (known: 5.1 .. 5.7)");
    }

    // Apply id-token filters uniformly (harmless where already filtered).
    std::vector<ComputedTable> kept;
    for (auto& t : tables)
      if (keep_table(t.pub->id, opts.overrides)) kept.push_back(std::move(t));
    if (kept.empty()) throw ConfigError("overrides match no benchmark table");

    for (const auto& t : kept) {
      write_bench_csv(opts.out_dir, t);
      std::cout << t.pub->id << ": wrote bench_" << t.pub->id
                << ".csv (max |value - paper_value| = " << fmt(max_cell_diff(t))
                << ")\n";
    }
    write_plot_data(opts.out_dir, example_id, kept);
    const double wall = timer.seconds();
    std::cout << "wall_time_seconds = " << fmt(wall) << "\n";
    std::ostringstream key;
    key << "bench " << example_id;
    for (const auto& [k, v] : opts.overrides) key << " --" << k << " " << v;
    key << " reg=" << reg << " conv=" << opts.lambda_convention
        << " sign=" << opts.stehfest_sign;
    write_run_meta(opts.out_dir, hex64(fnv1a(key.str())), wall);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  }
}

int cmd_weights(int ns, const CliOptions& opts) {
  Timer timer;
  try {
    auto w = stehfest_weights(ns);
    for (size_t l = 0; l < w.size(); ++l) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", w[l]);
      std::cout << (l + 1) << " " << buf << "\n";
    }
    write_run_meta(opts.out_dir, hex64(fnv1a("weights " + std::to_string(ns))),
                   timer.seconds());
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv) {
  auto usage = [](std::ostream& os) {
    os << "usage: mhelm <solve CONFIG | bench ID | weights NS> [options]\n"
          "options:\n"
          "  --out DIR                output directory (default .)\n"
          "  --threads K              worker threads, 0 = auto\n"
          "  --lambda-convention V    pde | paper (time stepping)\n"
          "  --stehfest-sign V        derived | paper (wave transform)\n"
          "  --reg R                  ridge regularization for the MFS solve\n"
          "bench filters: --N, --M, --ns, --T, --n, --c\n";
  };
  if (argc < 2) {
    usage(std::cerr);
    return 2;
  }
  const std::string cmd = argv[1];
  CliOptions opts;
  std::vector<std::string> positional;
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    auto need_value = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) throw ConfigError(std::string(flag) + " needs a value");
      return argv[++i];
    };
    try {
      if (arg == "--out") opts.out_dir = need_value("--out");
      else if (arg == "--threads") opts.threads = std::stoi(need_value("--threads"));
      else if (arg == "--lambda-convention")
        opts.lambda_convention = need_value("--lambda-convention");
      else if (arg == "--stehfest-sign") opts.stehfest_sign = need_value("--stehfest-sign");
      else if (arg == "--reg") {
        opts.reg = std::stod(need_value("--reg"));
        opts.reg_set = true;
      } else if (arg.rfind("--", 0) == 0) {
        opts.overrides[arg.substr(2)] = need_value(arg.c_str());
      } else {
        positional.push_back(arg);
      }
    } catch (const std::exception& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
  }
  if (opts.lambda_convention != "pde" && opts.lambda_convention != "paper") {
    std::cerr << "config error: --lambda-convention must be 'pde' or 'paper'\n";
    return 2;
  }
  if (opts.stehfest_sign != "derived" && opts.stehfest_sign != "paper") {
    std::cerr << "config error: --stehfest-sign must be 'derived' or 'paper'\n";
    return 2;
  }

  if (cmd == "solve") {
    if (positional.size() != 1) {
      std::cerr << "config error: solve needs exactly one config path\n";
      return 2;
    }
    return cmd_solve(positional[0], opts);
  }
  if (cmd == "bench") {
    if (positional.size() != 1) {
      std::cerr << "config error: bench needs exactly one example id\n";
      return 2;
    }
    return cmd_bench(positional[0], opts);
  }
  if (cmd == "weights") {
    if (positional.size() != 1) {
      std::cerr << "config error: weights needs exactly one ns value\n";
      return 2;
    }
    int ns = 0;
    try {
      ns = std::stoi(positional[0]);
    } catch (const std::exception&) {
      std::cerr << "config error: weights needs an integer ns\n";
      return 2;
    }
    return cmd_weights(ns, opts);
  }
  std::cerr << "config error: unknown command '" << cmd << "'\n";
  usage(std::cerr);
  return 2;
}

}  // namespace mhelm
