// Data-parallel inner loops of the solver, in two interchangeable variants:
// a scalar reference implementation and an AVX2 one.  The dispatched entry
// points pick the widest supported variant at runtime; tests assert the two
// variants agree on random inputs.
//
// Only the Tukey bisquare family has a vectorized path (its rho/psi are
// piecewise polynomials, so the clip is a single clamp).  Other score
// families evaluate through the generic scalar code in the score layer.
#pragma once

#include <cstddef>
#include <span>

namespace regtau::kernels {

enum class Backend { scalar, avx2 };

// Widest backend usable on this CPU (compile-time and runtime checked).
Backend preferred_backend();

// Currently dispatched backend.  set_backend is intended for tests and
// benchmarking; requests for an unsupported backend fall back to scalar.
Backend active_backend();
void set_backend(Backend b);

struct WmSums {
  double num = 0.0;  // sum of 2*rho2(u_i) - psi2(u_i)*u_i
  double den = 0.0;  // sum of psi1(u_i)*u_i
};

// sum_i rho_c(r_i * inv_sigma) with rho normalized to rho(inf) = 1.
double tukey_rho_sum(std::span<const double> r, double inv_sigma, double c);

// Numerator and denominator sums of the adaptive weight w_m over
// standardized residuals u.
WmSums tukey_wm_sums(std::span<const double> u, double c1, double c2);

// z_i = psi_tau(u_i) / (2 u_i) for u_i != 0, else 0, with
// psi_tau = wm * psi1 + psi2 (both Tukey).
void tukey_z_weights(std::span<const double> u, double wm, double c1, double c2,
                     std::span<double> z);

namespace scalar {
double tukey_rho_sum(std::span<const double> r, double inv_sigma, double c);
WmSums tukey_wm_sums(std::span<const double> u, double c1, double c2);
void tukey_z_weights(std::span<const double> u, double wm, double c1, double c2,
                     std::span<double> z);
}  // namespace scalar

namespace avx2 {
bool supported();
double tukey_rho_sum(std::span<const double> r, double inv_sigma, double c);
WmSums tukey_wm_sums(std::span<const double> u, double c1, double c2);
void tukey_z_weights(std::span<const double> u, double wm, double c1, double c2,
                     std::span<double> z);
}  // namespace avx2

}  // namespace regtau::kernels
