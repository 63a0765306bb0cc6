#include "regtau/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "regtau/errors.hpp"

namespace regtau {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights
// mu0 * (first eigenvector component)^2.
QuadRule golub_welsch(const Eigen::VectorXd& off_diag, double mu0) {
  const int n = static_cast<int>(off_diag.size()) + 1;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    J(i, i + 1) = off_diag(i);
    J(i + 1, i) = off_diag(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadRule gauss_legendre(int n) {
  Eigen::VectorXd beta(n - 1);
  for (int k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    beta(k - 1) = kk / std::sqrt(4.0 * kk * kk - 1.0);
  }
  return golub_welsch(beta, 2.0);
}

QuadRule gauss_hermite_prob(int n) {
  Eigen::VectorXd beta(n - 1);
  for (int k = 1; k < n; ++k) beta(k - 1) = std::sqrt(static_cast<double>(k));
  return golub_welsch(beta, 1.0);  // integral of the N(0,1) density is 1
}

double expect_normal_segmented(const std::function<double(double)>& f,
                               const std::vector<double>& breaks, double tail,
                               int points_per_segment) {
  static const double inv_sqrt_2pi = 0.3989422804014326779399461;
  std::vector<double> edges{0.0};
  for (double b : breaks)
    if (b > 0.0 && b < tail) edges.push_back(b);
  edges.push_back(tail);
  std::sort(edges.begin(), edges.end());

  const QuadRule gl = gauss_legendre(points_per_segment);
  double acc = 0.0;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double a = edges[s], b = edges[s + 1];
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < points_per_segment; ++i) {
      const double x = mid + half * gl.nodes[i];
      const double w = half * gl.weights[i] * inv_sqrt_2pi * std::exp(-0.5 * x * x);
      acc += w * (f(x) + f(-x));
    }
  }
  return acc;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double xtol, int max_iter) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NumericalError("find_root: interval does not bracket a sign change");
  for (int it = 0; it < max_iter; ++it) {
    // secant proposal, clipped into the bracket interior; bisection fallback
    double mid = 0.5 * (lo + hi);
    const double denom = fhi - flo;
    if (denom != 0.0) {
      const double sec = hi - fhi * (hi - lo) / denom;
      if (sec > lo + 0.1 * (hi - lo) && sec < hi - 0.1 * (hi - lo)) mid = sec;
    }
    const double fm = f(mid);
    if (fm == 0.0 || hi - lo < xtol) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace regtau
