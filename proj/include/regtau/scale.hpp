// Robust scale estimation and the composite tau score.
//
// m_scale solves (1/m) sum rho1(r_i / sigma) = b by the fixed-point
// iteration sigma_{k+1}^2 = sigma_k^2 * mean(rho1(r/sigma_k)) / b,
// started from median(|r|)/0.6745.  If at least half of the residuals are
// exactly zero (lower-median convention) the degenerate sigma = 0 is
// returned and callers treat the fit as exact.
#pragma once

#include <span>

#include "regtau/score.hpp"

namespace regtau {

struct ScaleResult {
  double sigma = 0.0;
  int iterations = 0;
  bool converged = false;
  double b = 0.0;
};

ScaleResult m_scale(std::span<const double> r, const ScoreFunction& rho1, double b,
                    double tol = 1e-9, int max_iter = 200);

// sigma_tau^2 = sigma_M^2 * (1/m) sum rho2(r_i / sigma_M); returns sigma_tau.
ScaleResult tau_scale(std::span<const double> r, const ScoreFunction& rho1,
                      const ScoreFunction& rho2, double b, double tol = 1e-9,
                      int max_iter = 200);

// Adaptive weight on standardized residuals (sign convention of the
// stationarity derivation: nonnegative for bisquare-type pairs).
// Throws DegenerateWeightsError when sum psi1(u) u == 0.
double w_m(std::span<const double> r_tilde, const ScoreFunction& rho1,
           const ScoreFunction& rho2);

inline double psi_tau(double u, double wm, const ScoreFunction& rho1,
                      const ScoreFunction& rho2) {
  return wm * rho1.psi(u) + rho2.psi(u);
}

// z = psi_tau(u) / (2u) for u != 0, else 0.
inline double irls_weight(double u, double psi_tau_val) {
  return u != 0.0 ? psi_tau_val / (2.0 * u) : 0.0;
}

// Bulk z-weights for a whole residual vector (kernel-backed for Tukey pairs).
void irls_weights(std::span<const double> r_tilde, double wm,
                  const ScoreFunction& rho1, const ScoreFunction& rho2,
                  std::span<double> z);

// median(|r|) with the lower-median convention (index (m-1)/2 of the sorted
// magnitudes), so exactly >= 50% zeros gives 0.
double median_abs(std::span<const double> r);

// median(|r - median(r)|): the usual MAD, used by the Huber-MAD baseline.
double mad(std::span<const double> r);

}  // namespace regtau
