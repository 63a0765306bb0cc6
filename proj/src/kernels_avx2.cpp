// AVX2 variants of the hot kernels.  Compiled with -mavx2 -mfma; selection
// happens at runtime via cpuid, so the rest of the library stays portable.
#include "regtau/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define REGTAU_X86 1
#include <immintrin.h>
#if defined(__GNUC__)
#include <cpuid.h>
#endif
#else
#define REGTAU_X86 0
#endif

namespace regtau::kernels::avx2 {

bool supported() {
#if REGTAU_X86 && defined(__GNUC__)
  static const bool ok = [] {
    unsigned eax, ebx, ecx, edx;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
    const bool avx2 = (ebx & (1u << 5)) != 0;
    if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx)) return false;
    const bool fma = (ecx & (1u << 12)) != 0;
    return avx2 && fma;
  }();
  return ok;
#else
  return false;
#endif
}

#if REGTAU_X86

namespace {

// t = min((u/c)^2, 1); returns s = 1 - t (>= 0, = 0 beyond the clip).
inline __m256d clip_term(__m256d u, __m256d inv_c, __m256d one) {
  __m256d t = _mm256_mul_pd(u, inv_c);
  t = _mm256_mul_pd(t, t);
  t = _mm256_min_pd(t, one);
  return _mm256_sub_pd(one, t);
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

}  // namespace

double tukey_rho_sum(std::span<const double> r, double inv_sigma, double c) {
  const std::size_t n = r.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d inv_c = _mm256_set1_pd(1.0 / c);
  const __m256d is = _mm256_set1_pd(inv_sigma);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d u = _mm256_mul_pd(_mm256_loadu_pd(r.data() + i), is);
    const __m256d s = clip_term(u, inv_c, one);
    const __m256d s3 = _mm256_mul_pd(_mm256_mul_pd(s, s), s);
    acc = _mm256_add_pd(acc, _mm256_sub_pd(one, s3));
  }
  double total = hsum(acc);
  if (n4 < n) total += scalar::tukey_rho_sum(r.subspan(n4), inv_sigma, c);
  return total;
}

WmSums tukey_wm_sums(std::span<const double> u, double c1, double c2) {
  const std::size_t n = u.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d inv_c1 = _mm256_set1_pd(1.0 / c1);
  const __m256d inv_c2 = _mm256_set1_pd(1.0 / c2);
  const __m256d k1 = _mm256_set1_pd(6.0 / (c1 * c1));
  const __m256d k2 = _mm256_set1_pd(6.0 / (c2 * c2));
  __m256d acc_num = _mm256_setzero_pd();
  __m256d acc_den = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d ui = _mm256_loadu_pd(u.data() + i);
    const __m256d s2 = clip_term(ui, inv_c2, one);
    const __m256d s2sq = _mm256_mul_pd(s2, s2);
    // rho2 = 1 - s2^3 ; psi2*u = 6 u^2 / c2^2 * s2^2
    const __m256d rho2 = _mm256_sub_pd(one, _mm256_mul_pd(s2sq, s2));
    const __m256d uu = _mm256_mul_pd(ui, ui);
    const __m256d psi2u = _mm256_mul_pd(k2, _mm256_mul_pd(uu, s2sq));
    acc_num = _mm256_add_pd(acc_num, _mm256_fmsub_pd(two, rho2, psi2u));
    const __m256d s1 = clip_term(ui, inv_c1, one);
    const __m256d s1sq = _mm256_mul_pd(s1, s1);
    const __m256d psi1u = _mm256_mul_pd(k1, _mm256_mul_pd(uu, s1sq));
    acc_den = _mm256_add_pd(acc_den, psi1u);
  }
  WmSums out{hsum(acc_num), hsum(acc_den)};
  if (n4 < n) {
    const WmSums tail = scalar::tukey_wm_sums(u.subspan(n4), c1, c2);
    out.num += tail.num;
    out.den += tail.den;
  }
  return out;
}

void tukey_z_weights(std::span<const double> u, double wm, double c1, double c2,
                     std::span<double> z) {
  const std::size_t n = u.size();
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d inv_c1 = _mm256_set1_pd(1.0 / c1);
  const __m256d inv_c2 = _mm256_set1_pd(1.0 / c2);
  const __m256d a1 = _mm256_set1_pd(3.0 * wm / (c1 * c1));
  const __m256d a2 = _mm256_set1_pd(3.0 / (c2 * c2));
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d ui = _mm256_loadu_pd(u.data() + i);
    const __m256d s1 = clip_term(ui, inv_c1, one);
    const __m256d s2 = clip_term(ui, inv_c2, one);
    __m256d zi = _mm256_fmadd_pd(a1, _mm256_mul_pd(s1, s1),
                                 _mm256_mul_pd(a2, _mm256_mul_pd(s2, s2)));
    // z(0) = 0 by convention
    const __m256d nonzero = _mm256_cmp_pd(ui, zero, _CMP_NEQ_OQ);
    zi = _mm256_and_pd(zi, nonzero);
    _mm256_storeu_pd(z.data() + i, zi);
  }
  if (n4 < n) scalar::tukey_z_weights(u.subspan(n4), wm, c1, c2, z.subspan(n4));
}

#else  // !REGTAU_X86

double tukey_rho_sum(std::span<const double> r, double inv_sigma, double c) {
  return scalar::tukey_rho_sum(r, inv_sigma, c);
}
WmSums tukey_wm_sums(std::span<const double> u, double c1, double c2) {
  return scalar::tukey_wm_sums(u, c1, c2);
}
void tukey_z_weights(std::span<const double> u, double wm, double c1, double c2,
                     std::span<double> z) {
  scalar::tukey_z_weights(u, wm, c1, c2, z);
}

#endif

}  // namespace regtau::kernels::avx2
