// Scalar reference kernels.  These define the semantics; the AVX2 variants
// are equivalence-tested against them.
#include "regtau/kernels.hpp"

namespace regtau::kernels::scalar {

namespace {

// rho(u) = 1 - (1 - min((u/c)^2, 1))^3
inline double rho1m(double u, double inv_c) {
  double t = u * inv_c;
  t *= t;
  if (t > 1.0) t = 1.0;
  const double s = 1.0 - t;
  return 1.0 - s * s * s;
}

// psi(u) = 6u/c^2 (1 - (u/c)^2)^2 inside the clip, 0 outside.
// With t clamped to 1 the outside branch falls out of the same expression.
inline double psi1m(double u, double inv_c) {
  double t = u * inv_c;
  t *= t;
  if (t > 1.0) t = 1.0;
  const double s = 1.0 - t;
  return 6.0 * u * inv_c * inv_c * s * s;
}

}  // namespace

double tukey_rho_sum(std::span<const double> r, double inv_sigma, double c) {
  const double inv_c = 1.0 / c;
  double acc = 0.0;
  for (const double ri : r) acc += rho1m(ri * inv_sigma, inv_c);
  return acc;
}

WmSums tukey_wm_sums(std::span<const double> u, double c1, double c2) {
  const double inv_c1 = 1.0 / c1;
  const double inv_c2 = 1.0 / c2;
  WmSums out;
  for (const double ui : u) {
    out.num += 2.0 * rho1m(ui, inv_c2) - psi1m(ui, inv_c2) * ui;
    out.den += psi1m(ui, inv_c1) * ui;
  }
  return out;
}

void tukey_z_weights(std::span<const double> u, double wm, double c1, double c2,
                     std::span<double> z) {
  const double inv_c1 = 1.0 / c1;
  const double inv_c2 = 1.0 / c2;
  const double a1 = 3.0 * wm * inv_c1 * inv_c1;
  const double a2 = 3.0 * inv_c2 * inv_c2;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double ui = u[i];
    if (ui == 0.0) {
      z[i] = 0.0;
      continue;
    }
    // psi_tau(u)/(2u) = 3 wm (1-t1)^2 / c1^2 + 3 (1-t2)^2 / c2^2
    double t1 = ui * inv_c1;
    t1 *= t1;
    if (t1 > 1.0) t1 = 1.0;
    double t2 = ui * inv_c2;
    t2 *= t2;
    if (t2 > 1.0) t2 = 1.0;
    const double s1 = 1.0 - t1;
    const double s2 = 1.0 - t2;
    z[i] = a1 * s1 * s1 + a2 * s2 * s2;
  }
}

}  // namespace regtau::kernels::scalar
