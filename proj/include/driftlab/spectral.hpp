#pragma once

#include <vector>

#include "driftlab/groups.hpp"
#include "driftlab/walker.hpp"

namespace driftlab {

// Equispaced collocation nodes theta_i = 2 pi i / M on the boundary circle.
struct OperatorGrid {
  int M = 256;
  bool valid() const { return M >= 64 && (M & (M - 1)) == 0; }
};

struct PressureSample {
  double t = 0.0;
  double lambda = 0.0;
  int M = 0;
  double residual = 0.0;
};

struct PressureCurve {
  std::vector<PressureSample> samples;
};

// Dense collocation matrix of the boundary averaging operator
//   [L_t f](xi) = (1/|closure|) sum_g |g'(xi)|^t f(g xi).
// Row i holds the weights of the trigonometric interpolant of order M
// evaluating f at the off-grid points g(theta_i), scaled by |g'(theta_i)|^t.
// At t = 0 every row sums to 1 (the interpolation kernel is a partition of
// unity), making the matrix stochastic up to roundoff.  Entries can be
// negative: the trigonometric kernel oscillates.
std::vector<double> build_operator_matrix(const std::vector<LabeledIsometry>& closure,
                                          double t, const OperatorGrid& grid);

struct SpectralRadiusResult {
  double lambda = 0.0;
  double residual = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Dominant eigenvalue by power iteration from the constant vector
// (tolerance 1e-12 on the residual |A v - lambda v|_inf / |v|_inf, at most
// 1e5 iterations).  Falls back to a dense Eigen eigensolve when the
// iteration stalls or oscillates.
SpectralRadiusResult spectral_radius(const std::vector<double>& matrix, int M);

// lambda(t) for each requested t.  P(0) = 0 and convexity of
// P(t) = log lambda(t) hold up to discretization error.
PressureCurve pressure_curve(const std::vector<LabeledIsometry>& closure,
                             const std::vector<double>& ts, const OperatorGrid& grid);

// Drift from the pressure derivative: ell = -P'(0), via the five-point
// Richardson form -(8(P(h) - P(-h)) - (P(2h) - P(-2h))) / (12 h).  The
// stderr field carries |central difference - extrapolated| as a heuristic
// error proxy (documented, not a statistical quantity).  The curve must
// contain t = -2h, -h, h, 2h at one M.
DriftEstimate drift_from_pressure(const PressureCurve& curve);

// Convenience: full pipeline at grid M with step h.
DriftEstimate spectral_drift(const GeneratorSet& gens, int M = 1024, double h = 1e-3);

// CSV rows "t,lambda,M,residual" for export.
std::string pressure_csv(const PressureCurve& curve);

}  // namespace driftlab
