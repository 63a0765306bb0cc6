#include "regtau/kernels.hpp"

#include <atomic>

namespace regtau::kernels {

namespace {
std::atomic<Backend> g_backend{avx2::supported() ? Backend::avx2 : Backend::scalar};
}

Backend preferred_backend() {
  return avx2::supported() ? Backend::avx2 : Backend::scalar;
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2::supported()) b = Backend::scalar;
  g_backend.store(b, std::memory_order_relaxed);
}

double tukey_rho_sum(std::span<const double> r, double inv_sigma, double c) {
  return active_backend() == Backend::avx2 ? avx2::tukey_rho_sum(r, inv_sigma, c)
                                           : scalar::tukey_rho_sum(r, inv_sigma, c);
}

WmSums tukey_wm_sums(std::span<const double> u, double c1, double c2) {
  return active_backend() == Backend::avx2 ? avx2::tukey_wm_sums(u, c1, c2)
                                           : scalar::tukey_wm_sums(u, c1, c2);
}

void tukey_z_weights(std::span<const double> u, double wm, double c1, double c2,
                     std::span<double> z) {
  if (active_backend() == Backend::avx2)
    avx2::tukey_z_weights(u, wm, c1, c2, z);
  else
    scalar::tukey_z_weights(u, wm, c1, c2, z);
}

}  // namespace regtau::kernels
