// Gaussian quadrature rules used for H0 expectations and for computing the
// default clipping constants.
#pragma once

#include <functional>
#include <vector>

namespace regtau {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1].
QuadRule gauss_legendre(int n);

// Probabilists' Gauss-Hermite: sum w_i f(x_i) approximates E_{N(0,1)}[f].
QuadRule gauss_hermite_prob(int n);

// E_{N(0,1)}[f] for piecewise-smooth f with kinks at +-breaks[i]:
// composite Gauss-Legendre on the smooth segments, exact to machine
// precision for polynomial pieces.
double expect_normal_segmented(const std::function<double(double)>& f,
                               const std::vector<double>& breaks,
                               double tail = 12.0, int points_per_segment = 64);

// Bracketed scalar root finding (bisection/secant hybrid).  Throws
// NumericalError if [lo, hi] does not bracket a sign change.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double xtol = 1e-13, int max_iter = 200);

}  // namespace regtau
