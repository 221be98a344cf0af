#include "ccs/kernels.hpp"

#include <cmath>

namespace ccs::kernels::scalar {

void minkowski_dot(const double* x, const double* y, const double* t, std::size_t n,
                   double px, double py, double pt, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i] * px + y[i] * py;
        out[i] = s - t[i] * pt;
    }
}

void minkowski_norm(const double* x, const double* y, const double* t, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i] * x[i] + y[i] * y[i];
        out[i] = s - t[i] * t[i];
    }
}

void incidence(const double* a, const double* b, const double* c, const double* d, std::size_t n,
               double e, double f, double g, double h, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double s0 = a[i] * e + b[i] * f;
        double s1 = c[i] * g + d[i] * h;
        out[i] = s0 + s1;
    }
}

void chord_slope(const double* x, const double* y, const double* t, std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double r = std::sqrt(x[i] * x[i] + y[i] * y[i]);
        out[i] = std::fabs(t[i]) / r;
    }
}

}  // namespace ccs::kernels::scalar
