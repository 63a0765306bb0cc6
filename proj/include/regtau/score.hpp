// Score (rho) function families and their derivatives.
//
// Bounded families are normalized to rho(inf) = 1, so the M-scale target b
// is directly comparable across choices.  psi = drho/du, psi_prime = dpsi/du.
#pragma once

#include <cmath>
#include <vector>

#include "regtau/errors.hpp"

namespace regtau {

enum class ScoreFamily { tukey_bisquare, huber, custom_tabulated };

class ScoreFunction {
 public:
  static ScoreFunction tukey(double c);
  static ScoreFunction huber(double c);
  // rho samples on a uniform grid over [0, c] (inclusive); samples.front()
  // must be 0, samples.back() 1, and the sequence nondecreasing.  Evaluated
  // by monotone cubic Hermite interpolation, extended evenly to u < 0 and
  // held at 1 beyond the clip.
  static ScoreFunction tabulated(std::vector<double> rho_samples, double c);

  double rho(double u) const;
  double psi(double u) const;
  double psi_prime(double u) const;

  ScoreFamily family() const { return family_; }
  double clip() const { return c_; }
  bool bounded() const { return family_ != ScoreFamily::huber; }

 private:
  ScoreFunction(ScoreFamily f, double c) : family_(f), c_(c) {}

  ScoreFamily family_;
  double c_;
  // tabulated family: values and Hermite slopes at the knots
  std::vector<double> tab_val_;
  std::vector<double> tab_slope_;
  double tab_h_ = 0.0;
};

// Free-function spellings of the operations above.
inline double rho(const ScoreFunction& f, double u) { return f.rho(u); }
inline double psi(const ScoreFunction& f, double u) { return f.psi(u); }
inline double psi_prime(const ScoreFunction& f, double u) { return f.psi_prime(u); }

// rho1/rho2 pair with the M-scale target b = E_{H0}[rho1].
struct Scores {
  ScoreFunction rho1;
  ScoreFunction rho2;
  double b;
};

// Default pair: Tukey bisquare, c1 solving E_{H0}[rho_c] = 1/2 (b = 1/2,
// 50% breakdown) and c2 solving Gaussian efficiency of the tau score = 0.95.
// Both roots are found numerically at first use, not hard-coded.
const Scores& default_scores();

// Same construction for arbitrary clipping constants; b by quadrature.
Scores make_tukey_scores(double c1, double c2);

// E_{N(0,1)}[rho] for any score function (piecewise-aware quadrature).
double gaussian_rho_expectation(const ScoreFunction& f);

}  // namespace regtau
