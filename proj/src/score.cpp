#include "regtau/score.hpp"

#include <algorithm>
#include <mutex>

#include "regtau/quadrature.hpp"

namespace regtau {

ScoreFunction ScoreFunction::tukey(double c) {
  if (!(c > 0.0)) throw InputError("tukey: clipping constant must be positive");
  return ScoreFunction(ScoreFamily::tukey_bisquare, c);
}

ScoreFunction ScoreFunction::huber(double c) {
  if (!(c > 0.0)) throw InputError("huber: clipping constant must be positive");
  return ScoreFunction(ScoreFamily::huber, c);
}

ScoreFunction ScoreFunction::tabulated(std::vector<double> rho_samples, double c) {
  if (!(c > 0.0)) throw InputError("tabulated: clipping constant must be positive");
  const std::size_t n = rho_samples.size();
  if (n < 4) throw InputError("tabulated: need at least 4 samples");
  if (rho_samples.front() != 0.0 || rho_samples.back() != 1.0)
    throw InputError("tabulated: samples must run from rho(0)=0 to rho(c)=1");
  for (std::size_t i = 1; i < n; ++i)
    if (rho_samples[i] < rho_samples[i - 1])
      throw InputError("tabulated: rho samples must be nondecreasing");

  ScoreFunction f(ScoreFamily::custom_tabulated, c);
  f.tab_h_ = c / static_cast<double>(n - 1);
  f.tab_val_ = std::move(rho_samples);

  // Fritsch-Carlson monotone slopes; flat at both ends so psi(0) = psi(c) = 0.
  const auto& v = f.tab_val_;
  const double h = f.tab_h_;
  std::vector<double> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i]) / h;
  std::vector<double>& m = f.tab_slope_;
  m.assign(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0)
      m[i] = 0.0;
    else
      m[i] = 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i]);  // harmonic mean
  }
  return f;
}

namespace {

struct Hermite {
  double value, deriv, deriv2;
};

Hermite eval_hermite(const std::vector<double>& v, const std::vector<double>& m,
                     double h, double q) {
  const std::size_t n = v.size();
  std::size_t i = static_cast<std::size_t>(q / h);
  if (i >= n - 1) i = n - 2;
  const double t = (q - static_cast<double>(i) * h) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  const double dh00 = 6 * t2 - 6 * t, dh10 = 3 * t2 - 4 * t + 1;
  const double dh01 = -6 * t2 + 6 * t, dh11 = 3 * t2 - 2 * t;
  const double d2h00 = 12 * t - 6, d2h10 = 6 * t - 4;
  const double d2h01 = -12 * t + 6, d2h11 = 6 * t - 2;
  Hermite out;
  out.value = h00 * v[i] + h10 * h * m[i] + h01 * v[i + 1] + h11 * h * m[i + 1];
  out.deriv = (dh00 * v[i] + dh01 * v[i + 1]) / h + dh10 * m[i] + dh11 * m[i + 1];
  out.deriv2 = (d2h00 * v[i] + d2h01 * v[i + 1]) / (h * h) +
               (d2h10 * m[i] + d2h11 * m[i + 1]) / h;
  return out;
}

}  // namespace

double ScoreFunction::rho(double u) const {
  const double q = std::fabs(u);
  switch (family_) {
    case ScoreFamily::tukey_bisquare: {
      if (q >= c_) return 1.0;
      const double t = (u / c_) * (u / c_);
      const double s = 1.0 - t;
      return 1.0 - s * s * s;
    }
    case ScoreFamily::huber:
      return q <= c_ ? u * u : 2.0 * c_ * q - c_ * c_;
    case ScoreFamily::custom_tabulated:
      if (q >= c_) return 1.0;
      return eval_hermite(tab_val_, tab_slope_, tab_h_, q).value;
  }
  return 0.0;
}

double ScoreFunction::psi(double u) const {
  const double q = std::fabs(u);
  switch (family_) {
    case ScoreFamily::tukey_bisquare: {
      if (q >= c_) return 0.0;
      const double t = (u / c_) * (u / c_);
      const double s = 1.0 - t;
      return 6.0 * u / (c_ * c_) * s * s;
    }
    case ScoreFamily::huber:
      return q <= c_ ? 2.0 * u : 2.0 * c_ * (u > 0 ? 1.0 : -1.0);
    case ScoreFamily::custom_tabulated: {
      if (q >= c_) return 0.0;
      const double d = eval_hermite(tab_val_, tab_slope_, tab_h_, q).deriv;
      return u < 0 ? -d : d;
    }
  }
  return 0.0;
}

double ScoreFunction::psi_prime(double u) const {
  const double q = std::fabs(u);
  switch (family_) {
    case ScoreFamily::tukey_bisquare: {
      if (q >= c_) return 0.0;
      const double t = (u / c_) * (u / c_);
      return 6.0 / (c_ * c_) * (1.0 - t) * (1.0 - 5.0 * t);
    }
    case ScoreFamily::huber:
      return q <= c_ ? 2.0 : 0.0;
    case ScoreFamily::custom_tabulated:
      if (q >= c_) return 0.0;
      return eval_hermite(tab_val_, tab_slope_, tab_h_, q).deriv2;
  }
  return 0.0;
}

double gaussian_rho_expectation(const ScoreFunction& f) {
  return expect_normal_segmented([&f](double u) { return f.rho(u); }, {f.clip()});
}

Scores make_tukey_scores(double c1, double c2) {
  ScoreFunction r1 = ScoreFunction::tukey(c1);
  return Scores{r1, ScoreFunction::tukey(c2), gaussian_rho_expectation(r1)};
}

namespace {

// Gaussian efficiency of the tau score psi_tau = w_inf psi1 + psi2 relative
// to least squares: (E psi_tau')^2 / E psi_tau^2 with the weight at H0.
double tau_gaussian_efficiency(double c1, double c2) {
  const ScoreFunction r1 = ScoreFunction::tukey(c1);
  const ScoreFunction r2 = ScoreFunction::tukey(c2);
  const std::vector<double> brk{c1, c2};
  const double num_w = expect_normal_segmented(
      [&](double u) { return 2.0 * r2.rho(u) - r2.psi(u) * u; }, {c2});
  const double den_w =
      expect_normal_segmented([&](double u) { return r1.psi(u) * u; }, {c1});
  const double w = num_w / den_w;
  const double d = expect_normal_segmented(
      [&](double u) { return w * r1.psi_prime(u) + r2.psi_prime(u); }, brk);
  const double v = expect_normal_segmented(
      [&](double u) {
        const double p = w * r1.psi(u) + r2.psi(u);
        return p * p;
      },
      brk);
  return d * d / v;
}

}  // namespace

const Scores& default_scores() {
  static std::once_flag flag;
  static Scores* cached = nullptr;
  std::call_once(flag, [] {
    const double c1 = find_root(
        [](double c) {
          return gaussian_rho_expectation(ScoreFunction::tukey(c)) - 0.5;
        },
        0.5, 5.0);
    const double c2 = find_root(
        [c1](double c) { return tau_gaussian_efficiency(c1, c) - 0.95; }, 3.0, 12.0);
    cached = new Scores(make_tukey_scores(c1, c2));
  });
  return *cached;
}

}  // namespace regtau
