#include "driftlab/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace driftlab {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

// Periodic trigonometric interpolation kernel for even M:
//   tau(x) = sin(M x / 2) / (M tan(x / 2)),
// which is 1 at x = 0 and 0 at the other grid offsets 2 pi j / M.
inline double trig_kernel(double x, int M) {
  if (std::abs(x) < 1e-14) return 1.0;
  return std::sin(0.5 * M * x) / (M * std::tan(0.5 * x));
}

}  // namespace

std::vector<double> build_operator_matrix(const std::vector<LabeledIsometry>& closure,
                                          double t, const OperatorGrid& grid) {
  if (closure.empty()) throw std::invalid_argument("operator matrix: empty closure");
  if (!grid.valid()) throw std::invalid_argument("operator grid: M must be a power of two >= 64");
  const int M = grid.M;
  std::vector<double> A(static_cast<std::size_t>(M) * M, 0.0);
  const double inv_count = 1.0 / static_cast<double>(closure.size());

  for (const LabeledIsometry& g : closure) {
    for (int i = 0; i < M; ++i) {
      BoundaryPoint xi{kTwoPi * i / M};
      double phi = apply(g.map, xi).theta;
      double w = inv_count * std::pow(boundary_derivative(g.map, xi), t);
      double* row = &A[static_cast<std::size_t>(i) * M];
      for (int j = 0; j < M; ++j) {
        double x = phi - kTwoPi * j / M;
        x = std::remainder(x, kTwoPi);
        row[j] += w * trig_kernel(x, M);
      }
    }
  }
  return A;
}

SpectralRadiusResult spectral_radius(const std::vector<double>& matrix, int M) {
  if (matrix.size() != static_cast<std::size_t>(M) * M)
    throw std::invalid_argument("spectral_radius: matrix size mismatch");

  // Power iteration on A + I: the dominant eigenvalue of interest is near 1
  // and positive, and the shift suppresses sign flipping from any negative
  // eigenvalue of comparable magnitude.
  std::vector<double> v(M, 1.0), av(M), w(M);
  auto matvec = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < M; ++i) {
      const double* row = &matrix[static_cast<std::size_t>(i) * M];
      double s = 0.0;
      for (int j = 0; j < M; ++j) s += row[j] * x[j];
      y[i] = s;
    }
  };

  const int max_iter = 100000;
  const double tol = 1e-12;
  double lambda = 1.0;
  double prev_residual = 1e300;
  int stall = 0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    matvec(v, av);
    // Rayleigh quotient for A (not the shifted operator).
    double num = 0.0, den = 0.0, vinf = 0.0;
    for (int i = 0; i < M; ++i) {
      num += v[i] * av[i];
      den += v[i] * v[i];
      vinf = std::max(vinf, std::abs(v[i]));
    }
    lambda = num / den;
    double resid = 0.0;
    for (int i = 0; i < M; ++i)
      resid = std::max(resid, std::abs(av[i] - lambda * v[i]));
    resid /= vinf;
    if (resid < tol)
      return {lambda, resid, true, iter};
    // Oscillation / stall detection: residual no longer contracting.
    if (resid > 0.999 * prev_residual) {
      if (++stall > 50) return {lambda, resid, false, iter};
    } else {
      stall = 0;
    }
    prev_residual = resid;
    // next iterate: (A + I) v, normalized in the sup norm
    double winf = 0.0;
    for (int i = 0; i < M; ++i) {
      w[i] = av[i] + v[i];
      winf = std::max(winf, std::abs(w[i]));
    }
    if (winf == 0.0) return {0.0, 0.0, true, iter};
    for (int i = 0; i < M; ++i) v[i] = w[i] / winf;
  }
  return {lambda, prev_residual, false, max_iter};
}

namespace {

// Dense fallback: modulus-largest eigenvalue via Eigen.
SpectralRadiusResult dense_spectral_radius(const std::vector<double>& matrix, int M) {
  Eigen::MatrixXd A(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) A(i, j) = matrix[static_cast<std::size_t>(i) * M + j];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(A, /*computeEigenvectors=*/false);
  double best = 0.0;
  for (int i = 0; i < M; ++i)
    best = std::max(best, std::abs(solver.eigenvalues()[i]));
  return {best, 0.0, true, 0};
}

}  // namespace

PressureCurve pressure_curve(const std::vector<LabeledIsometry>& closure,
                             const std::vector<double>& ts, const OperatorGrid& grid) {
  PressureCurve curve;
  for (double t : ts) {
    std::vector<double> A = build_operator_matrix(closure, t, grid);
    SpectralRadiusResult r = spectral_radius(A, grid.M);
    if (!r.converged) r = dense_spectral_radius(A, grid.M);
    if (r.lambda <= 0.0)
      throw std::runtime_error("pressure_curve: nonpositive spectral radius");
    curve.samples.push_back({t, r.lambda, grid.M, r.residual});
  }
  return curve;
}

DriftEstimate drift_from_pressure(const PressureCurve& curve) {
  // locate a symmetric stencil -2h, -h, h, 2h at a single M
  auto find = [&](double t, int M) -> const PressureSample* {
    for (const PressureSample& s : curve.samples)
      if (s.M == M && std::abs(s.t - t) < 1e-15) return &s;
    return nullptr;
  };
  for (const PressureSample& s : curve.samples) {
    if (s.t <= 0.0) continue;
    double h = s.t;
    if (h > 1e-2) continue;
    const PressureSample* ph = find(h, s.M);
    const PressureSample* mh = find(-h, s.M);
    const PressureSample* p2h = find(2 * h, s.M);
    const PressureSample* m2h = find(-2 * h, s.M);
    if (!(ph && mh && p2h && m2h)) continue;
    double Lh = std::log(ph->lambda), Lmh = std::log(mh->lambda);
    double L2h = std::log(p2h->lambda), Lm2h = std::log(m2h->lambda);
    double central = -(Lh - Lmh) / (2 * h);
    double richardson = -(8 * (Lh - Lmh) - (L2h - Lm2h)) / (12 * h);
    DriftEstimate est;
    est.mean = richardson;
    est.stderr_ = std::abs(central - richardson);
    est.n = ph->M;  // grid size in lieu of a walk length
    est.N = 0;
    est.method = DriftMethod::spectral;
    return est;
  }
  throw std::invalid_argument(
      "drift_from_pressure: curve lacks a -2h,-h,h,2h stencil with h <= 1e-2");
}

DriftEstimate spectral_drift(const GeneratorSet& gens, int M, double h) {
  OperatorGrid grid{M};
  auto closure = symmetric_closure(gens);
  PressureCurve curve =
      pressure_curve(closure, {-2 * h, -h, h, 2 * h}, grid);
  return drift_from_pressure(curve);
}

std::string pressure_csv(const PressureCurve& curve) {
  std::ostringstream os;
  os << "t,lambda,M,residual\n";
  os.precision(17);
  for (const PressureSample& s : curve.samples)
    os << s.t << "," << s.lambda << "," << s.M << "," << s.residual << "\n";
  return os.str();
}

}  // namespace driftlab
