#include "ccs/kernels.hpp"

#if defined(__aarch64__)
#define CCS_HAVE_NEON 1
#include <arm_neon.h>
#else
#define CCS_HAVE_NEON 0
#endif

namespace ccs::kernels::neon {

#if CCS_HAVE_NEON

bool compiled() { return true; }

void minkowski_dot(const double* x, const double* y, const double* t, std::size_t n, double px,
                   double py, double pt, double* out) {
    const float64x2_t vx = vdupq_n_f64(px);
    const float64x2_t vy = vdupq_n_f64(py);
    const float64x2_t vt = vdupq_n_f64(pt);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t s = vaddq_f64(vmulq_f64(vld1q_f64(x + i), vx), vmulq_f64(vld1q_f64(y + i), vy));
        vst1q_f64(out + i, vsubq_f64(s, vmulq_f64(vld1q_f64(t + i), vt)));
    }
    scalar::minkowski_dot(x + i, y + i, t + i, n - i, px, py, pt, out + i);
}

void minkowski_norm(const double* x, const double* y, const double* t, std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t a = vld1q_f64(x + i);
        const float64x2_t b = vld1q_f64(y + i);
        const float64x2_t c = vld1q_f64(t + i);
        float64x2_t s = vaddq_f64(vmulq_f64(a, a), vmulq_f64(b, b));
        vst1q_f64(out + i, vsubq_f64(s, vmulq_f64(c, c)));
    }
    scalar::minkowski_norm(x + i, y + i, t + i, n - i, out + i);
}

void incidence(const double* a, const double* b, const double* c, const double* d, std::size_t n,
               double e, double f, double g, double h, double* out) {
    const float64x2_t ve = vdupq_n_f64(e);
    const float64x2_t vf = vdupq_n_f64(f);
    const float64x2_t vg = vdupq_n_f64(g);
    const float64x2_t vh = vdupq_n_f64(h);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t s0 = vaddq_f64(vmulq_f64(vld1q_f64(a + i), ve), vmulq_f64(vld1q_f64(b + i), vf));
        float64x2_t s1 = vaddq_f64(vmulq_f64(vld1q_f64(c + i), vg), vmulq_f64(vld1q_f64(d + i), vh));
        vst1q_f64(out + i, vaddq_f64(s0, s1));
    }
    scalar::incidence(a + i, b + i, c + i, d + i, n - i, e, f, g, h, out + i);
}

void chord_slope(const double* x, const double* y, const double* t, std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t a = vld1q_f64(x + i);
        const float64x2_t b = vld1q_f64(y + i);
        const float64x2_t r = vsqrtq_f64(vaddq_f64(vmulq_f64(a, a), vmulq_f64(b, b)));
        vst1q_f64(out + i, vdivq_f64(vabsq_f64(vld1q_f64(t + i)), r));
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

}  // namespace ccs::kernels::neon
