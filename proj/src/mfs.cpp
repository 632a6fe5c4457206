#include "mhelm/mfs.hpp"

#include <cmath>

#include "mhelm/specialfn.hpp"
#include "mhelm/threading.hpp"

namespace mhelm {

namespace {

constexpr double kPivotThreshold = 1e-14;  // relative to the largest pivot
constexpr double kUsableResidual = 1e-3;   // relative; beyond this a truncated solve is garbage

void check_sizes(const std::vector<Point>& colloc, const std::vector<Point>& src,
                 std::size_t nvals) {
  if (src.empty()) throw SolverError("assemble: empty source set");
  if (colloc.size() < src.size())
    throw SolverError("assemble: need at least as many collocation points as sources");
  if (colloc.size() != nvals)
    throw SolverError("assemble: collocation/value sizes differ");
}

template <class Mat>
void fill_matrix(Mat& A, const WaveNumber& kappa, int dim, const std::vector<Point>& colloc,
                 const std::vector<Point>& src) {
  const std::size_t rows = colloc.size();
  const std::size_t cols = src.size();
  parallel_for(rows, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      for (std::size_t m = 0; m < cols; ++m) {
        const double r = dist(colloc[k], src[m]);
        if (r == 0.0) throw SolverError("assemble: collocation point coincides with a source");
        const Complex g = fundamental_solution(kappa, dim, r);
        if constexpr (std::is_same_v<typename Mat::Scalar, double>)
          A((Eigen::Index)k, (Eigen::Index)m) = g.real();
        else
          A((Eigen::Index)k, (Eigen::Index)m) = g;
      }
    }
  });
}

template <class Mat, class Vec>
SolveResult solve_impl(const MfsSystem& sys, const Mat& A, const Vec& b, double reg) {
  using Scalar = typename Mat::Scalar;
  const Eigen::Index rows = A.rows();
  const Eigen::Index N = A.cols();  // unknowns; rows >= N when oversampled
  Vec c(N);
  double cond = 0.0;
  int rank = (int)N;

  if (reg > 0.0) {
    Mat S(rows + N, N);
    S.topRows(rows) = A;
    S.bottomRows(N) = Mat::Identity(N, N) * Scalar(reg);
    Vec rhs = Vec::Zero(rows + N);
    rhs.head(rows) = b;
    Eigen::ColPivHouseholderQR<Mat> qr(S);
    qr.setThreshold(kPivotThreshold);
    c = qr.solve(rhs);
    const auto& R = qr.matrixR();
    cond = std::abs(R(0, 0)) / std::abs(R(N - 1, N - 1));
    rank = (int)qr.rank();
  } else {
    Eigen::ColPivHouseholderQR<Mat> qr(A);
    qr.setThreshold(kPivotThreshold);
    rank = (int)qr.rank();
    c = qr.solve(b);
    const auto& R = qr.matrixR();
    const double dmax = std::abs(R(0, 0));
    const double dmin = std::abs(R(N - 1, N - 1));
    cond = dmin > 0.0 ? dmax / dmin : std::numeric_limits<double>::infinity();
  }

  const double resid = (A * c - b).norm();
  const double bnorm = b.norm();
  if (!c.allFinite())
    throw SolverError("solve: non-finite coefficients; try a positive regularization");
  if (reg == 0.0 && rank < (int)N && resid > kUsableResidual * std::max(bnorm, 1.0))
    throw SolverError("solve: numerically rank-deficient system (rank " + std::to_string(rank) +
                      " of " + std::to_string(N) +
                      "); try a positive regularization");

  SolveResult out{{sys.kappa, sys.dim, sys.sources, {}}, {resid, cond, rank, (int)N}};
  out.field.coeff.resize(N);
  for (Eigen::Index i = 0; i < N; ++i) out.field.coeff[i] = Complex(c(i));
  return out;
}

}  // namespace

MfsSystem assemble(const WaveNumber& kappa, int dim, std::vector<Point> collocation,
                   std::vector<Point> sources, const std::vector<double>& boundary_values) {
  check_sizes(collocation, sources, boundary_values.size());
  MfsSystem sys{kappa, dim, std::move(collocation), std::move(sources), {}, {}, {}, {}};
  const Eigen::Index rows = (Eigen::Index)sys.collocation.size();
  const Eigen::Index cols = (Eigen::Index)sys.sources.size();
  if (kappa.is_modified()) {
    sys.A.resize(rows, cols);
    fill_matrix(sys.A, kappa, dim, sys.collocation, sys.sources);
    sys.b = Eigen::Map<const Eigen::VectorXd>(boundary_values.data(), rows);
  } else {
    sys.Ac.resize(rows, cols);
    fill_matrix(sys.Ac, kappa, dim, sys.collocation, sys.sources);
    sys.bc.resize(rows);
    for (Eigen::Index i = 0; i < rows; ++i) sys.bc(i) = Complex(boundary_values[i]);
  }
  return sys;
}

MfsSystem assemble(const WaveNumber& kappa, int dim, std::vector<Point> collocation,
                   std::vector<Point> sources, const std::vector<Complex>& boundary_values) {
  check_sizes(collocation, sources, boundary_values.size());
  if (kappa.is_modified()) {
    std::vector<double> re(boundary_values.size());
    for (std::size_t i = 0; i < boundary_values.size(); ++i) {
      if (boundary_values[i].imag() != 0.0)
        throw SolverError("assemble: complex boundary data with a modified-kind operator");
      re[i] = boundary_values[i].real();
    }
    return assemble(kappa, dim, std::move(collocation), std::move(sources), re);
  }
  MfsSystem sys{kappa, dim, std::move(collocation), std::move(sources), {}, {}, {}, {}};
  const Eigen::Index rows = (Eigen::Index)sys.collocation.size();
  sys.Ac.resize(rows, (Eigen::Index)sys.sources.size());
  fill_matrix(sys.Ac, kappa, dim, sys.collocation, sys.sources);
  sys.bc = Eigen::Map<const Eigen::VectorXcd>(boundary_values.data(), rows);
  return sys;
}

SolveResult solve(const MfsSystem& system, double regularization) {
  if (regularization < 0) throw SolverError("solve: regularization must be >= 0");
  if (system.kappa.is_modified()) return solve_impl(system, system.A, system.b, regularization);
  return solve_impl(system, system.Ac, system.bc, regularization);
}

Complex eval(const MfsField& field, const Point& x) {
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < field.sources.size(); ++k) {
    const double r = dist(x, field.sources[k]);
    if (r == 0.0) throw SolverError("eval: evaluation at a source point");
    if (field.coeff[k] == Complex(0.0, 0.0)) continue;
    acc += field.coeff[k] * fundamental_solution(field.kappa, field.dim, r);
  }
  return acc;
}

double eval_real(const MfsField& field, const Point& x) { return eval(field, x).real(); }

}  // namespace mhelm
