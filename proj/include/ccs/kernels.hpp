#pragma once

// Batched arithmetic used by the geometric inner loops: leaf sign tests,
// pair separations, plane incidences.  Every kernel has a scalar reference
// implementation and vector variants selected at runtime.  Variants evaluate
// the same expression tree in the same order (the build disables FP
// contraction), so results are bit-identical to the scalar path.

#include <cstddef>
#include <span>
#include <string_view>

namespace ccs::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Best variant supported by the running CPU.
Isa detected_isa();

/// Variant currently used by the dispatching entry points.
Isa active_isa();

/// Override the variant (tests).  Requests for unsupported variants fall back
/// to Scalar; the variant actually installed is returned.
Isa force_isa(Isa isa);

/// Structure-of-arrays view of Minkowski vectors (x, y, t).
struct Vec3Soa {
    std::span<const double> x, y, t;
    std::size_t size() const { return x.size(); }
};

/// Structure-of-arrays view of R^4 vectors (A, B, C, D).
struct Vec4Soa {
    std::span<const double> a, b, c, d;
    std::size_t size() const { return a.size(); }
};

/// out[i] = <v_i, p> with the form x x' + y y' - t t'.
void minkowski_dot(const Vec3Soa& v, double px, double py, double pt, std::span<double> out);

/// out[i] = <v_i, v_i>.
void minkowski_norm(const Vec3Soa& v, std::span<double> out);

/// out[i] = e a_i + f b_i + g c_i + h d_i.
void incidence(const Vec4Soa& v, double e, double f, double g, double h, std::span<double> out);

/// out[i] = |t_i| / sqrt(x_i^2 + y_i^2)  (spatial slope of a chord).
void chord_slope(const Vec3Soa& v, std::span<double> out);

// Per-variant entry points, exposed for the equivalence tests.
namespace scalar {
void minkowski_dot(const double* x, const double* y, const double* t, std::size_t n,
                   double px, double py, double pt, double* out);
void minkowski_norm(const double* x, const double* y, const double* t, std::size_t n, double* out);
void incidence(const double* a, const double* b, const double* c, const double* d, std::size_t n,
               double e, double f, double g, double h, double* out);
void chord_slope(const double* x, const double* y, const double* t, std::size_t n, double* out);
}  // namespace scalar

namespace avx2 {
bool compiled();
void minkowski_dot(const double* x, const double* y, const double* t, std::size_t n,
                   double px, double py, double pt, double* out);
void minkowski_norm(const double* x, const double* y, const double* t, std::size_t n, double* out);
void incidence(const double* a, const double* b, const double* c, const double* d, std::size_t n,
               double e, double f, double g, double h, double* out);
void chord_slope(const double* x, const double* y, const double* t, std::size_t n, double* out);
}  // namespace avx2

namespace neon {
bool compiled();
void minkowski_dot(const double* x, const double* y, const double* t, std::size_t n,
                   double px, double py, double pt, double* out);
void minkowski_norm(const double* x, const double* y, const double* t, std::size_t n, double* out);
void incidence(const double* a, const double* b, const double* c, const double* d, std::size_t n,
               double e, double f, double g, double h, double* out);
void chord_slope(const double* x, const double* y, const double* t, std::size_t n, double* out);
}  // namespace neon

}  // namespace ccs::kernels
