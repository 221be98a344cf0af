#include "ccs/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define CCS_HAVE_AVX2 1
#include <immintrin.h>
#else
#define CCS_HAVE_AVX2 0
#endif

namespace ccs::kernels::avx2 {

#if CCS_HAVE_AVX2

#define CCS_AVX2_FN __attribute__((target("avx2")))

bool compiled() { return true; }

CCS_AVX2_FN void minkowski_dot(const double* x, const double* y, const double* t, std::size_t n,
                               double px, double py, double pt, double* out) {
    const __m256d vx = _mm256_set1_pd(px);
    const __m256d vy = _mm256_set1_pd(py);
    const __m256d vt = _mm256_set1_pd(pt);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d s = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(x + i), vx),
                                  _mm256_mul_pd(_mm256_loadu_pd(y + i), vy));
        s = _mm256_sub_pd(s, _mm256_mul_pd(_mm256_loadu_pd(t + i), vt));
        _mm256_storeu_pd(out + i, s);
    }
    scalar::minkowski_dot(x + i, y + i, t + i, n - i, px, py, pt, out + i);
}

CCS_AVX2_FN void minkowski_norm(const double* x, const double* y, const double* t, std::size_t n,
                                double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(x + i);
        const __m256d b = _mm256_loadu_pd(y + i);
        const __m256d c = _mm256_loadu_pd(t + i);
        __m256d s = _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(s, _mm256_mul_pd(c, c)));
    }
    scalar::minkowski_norm(x + i, y + i, t + i, n - i, out + i);
}

CCS_AVX2_FN void incidence(const double* a, const double* b, const double* c, const double* d,
                           std::size_t n, double e, double f, double g, double h, double* out) {
    const __m256d ve = _mm256_set1_pd(e);
    const __m256d vf = _mm256_set1_pd(f);
    const __m256d vg = _mm256_set1_pd(g);
    const __m256d vh = _mm256_set1_pd(h);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d s0 = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(a + i), ve),
                                   _mm256_mul_pd(_mm256_loadu_pd(b + i), vf));
        __m256d s1 = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(c + i), vg),
                                   _mm256_mul_pd(_mm256_loadu_pd(d + i), vh));
        _mm256_storeu_pd(out + i, _mm256_add_pd(s0, s1));
    }
    scalar::incidence(a + i, b + i, c + i, d + i, n - i, e, f, g, h, out + i);
}

CCS_AVX2_FN void chord_slope(const double* x, const double* y, const double* t, std::size_t n,
                             double* out) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(x + i);
        const __m256d b = _mm256_loadu_pd(y + i);
        const __m256d r = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b)));
        const __m256d dt = _mm256_andnot_pd(sign, _mm256_loadu_pd(t + i));
        _mm256_storeu_pd(out + i, _mm256_div_pd(dt, r));
    }
    scalar::chord_slope(x + i, y + i, t + i, n - i, out + i);
}

#else

bool compiled() { return false; }
void minkowski_dot(const double* x, const double* y, const double* t, std::size_t n, double px,
                   double py, double pt, double* out) {
    scalar::minkowski_dot(x, y, t, n, px, py, pt, out);
}
void minkowski_norm(const double* x, const double* y, const double* t, std::size_t n, double* out) {
    scalar::minkowski_norm(x, y, t, n, out);
}
void incidence(const double* a, const double* b, const double* c, const double* d, std::size_t n,
               double e, double f, double g, double h, double* out) {
    scalar::incidence(a, b, c, d, n, e, f, g, h, out);
}
void chord_slope(const double* x, const double* y, const double* t, std::size_t n, double* out) {
    scalar::chord_slope(x, y, t, n, out);
}

#endif

}  // namespace ccs::kernels::avx2
