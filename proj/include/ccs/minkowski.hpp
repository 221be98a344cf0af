#pragma once

// Linear algebra of R^{2+1} with the form dx^2 + dy^2 - dt^2, the hyperboloid
// model of H^2, and the identification PSL(2,R) = SO(2,1)_0.
//
// Adjoint basis.  A traceless 2x2 matrix is written
//
//     X(x, y, t) = [[ y,     x + t ],
//                   [ x - t, -y    ]]
//
// so that -det X = x^2 + y^2 - t^2 is the Minkowski form (the Killing form
// up to the factor 8).  In this basis
//   * diag(e^{l/2}, e^{-l/2}) acts as the boost in the (x, t) plane fixing
//     the y axis (boost_y_fixed(l));
//   * the rotation subgroup fixes the apex (0, 0, 1), which corresponds to
//     the point i of the upper half plane;
//   * the column vector (p, q) in R^2 corresponds to the future null
//     vector ((p^2 - q^2)/2, -pq, (p^2 + q^2)/2), i.e. the ideal point
//     z = p/q of the upper half plane.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>

#include "ccs/error.hpp"

namespace ccs {

inline constexpr double kDefaultEps = 1e-9;

struct MinkowskiVector {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;

    MinkowskiVector operator+(const MinkowskiVector& o) const { return {x + o.x, y + o.y, t + o.t}; }
    MinkowskiVector operator-(const MinkowskiVector& o) const { return {x - o.x, y - o.y, t - o.t}; }
    MinkowskiVector operator-() const { return {-x, -y, -t}; }
    MinkowskiVector operator*(double s) const { return {x * s, y * s, t * s}; }
    MinkowskiVector& operator+=(const MinkowskiVector& o) {
        x += o.x;
        y += o.y;
        t += o.t;
        return *this;
    }
    bool operator==(const MinkowskiVector&) const = default;
};

inline MinkowskiVector operator*(double s, const MinkowskiVector& v) { return v * s; }

double minkowski_inner(const MinkowskiVector& u, const MinkowskiVector& v);
double sup_norm(const MinkowskiVector& v);
double euclidean_norm(const MinkowskiVector& v);

/// Vector w with <w, u> = <w, v> = 0 (G applied to the Euclidean cross product).
MinkowskiVector minkowski_cross(const MinkowskiVector& u, const MinkowskiVector& v);

/// Euclidean determinant of the rows (a, b, c) in (x, y, t) coordinates.
double det3(const MinkowskiVector& a, const MinkowskiVector& b, const MinkowskiVector& c);

enum class CausalClass { Timelike, Null, Spacelike, Zero };

const char* to_string(CausalClass c);

/// Sign of <v,v> relative to eps * |v|^2; Zero when |v|_inf < eps.
CausalClass classify(const MinkowskiVector& v, double eps = kDefaultEps);

using Mat3 = std::array<double, 9>;  // row-major

/// Element of SO(2,1)_0.
class LorentzLinear {
public:
    LorentzLinear();  // identity

    /// Validates A^T G A = G, det A = 1 and A[t][t] >= 1 within eps.
    static LorentzLinear from_matrix(const Mat3& m, double eps = kDefaultEps);
    static LorentzLinear unchecked(const Mat3& m);

    const Mat3& matrix() const { return m_; }
    double operator()(std::size_t r, std::size_t c) const { return m_[3 * r + c]; }

    MinkowskiVector apply(const MinkowskiVector& v) const;
    LorentzLinear operator*(const LorentzLinear& o) const;
    LorentzLinear inverse() const;  // G A^T G

    /// max |A^T G A - G|.
    double form_residual() const;
    double max_abs_diff(const LorentzLinear& o) const;

private:
    explicit LorentzLinear(const Mat3& m) : m_(m) {}
    Mat3 m_;
};

/// Boost in the (x, t) plane fixing the y axis: the holonomy T(lambda).
LorentzLinear boost_y_fixed(double lambda);

/// Rotation of the (x, y) plane by angle theta.
LorentzLinear rotation_t_fixed(double theta);

/// x -> A x + b.
struct LorentzIsometry {
    LorentzLinear linear;
    MinkowskiVector translation;

    MinkowskiVector apply(const MinkowskiVector& v) const { return linear.apply(v) + translation; }
    LorentzIsometry operator*(const LorentzIsometry& o) const {
        return {linear * o.linear, linear.apply(o.translation) + translation};
    }
    LorentzIsometry inverse() const {
        LorentzLinear inv = linear.inverse();
        return {inv, -inv.apply(translation)};
    }
    double max_abs_diff(const LorentzIsometry& o) const;
};

/// 2x2 matrix [[a, b], [c, d]].  PSL(2,R) elements are kept in the canonical
/// sign representative (first nonzero entry, row-major, positive).
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 identity() { return {}; }

    /// Checks |det - 1| <= eps * max(1, |m|^2) and canonicalizes.
    static Mat2 unimodular(double a, double b, double c, double d, double eps = kDefaultEps);

    /// Scales a matrix with positive determinant to det 1 and canonicalizes.
    static Mat2 normalized(double a, double b, double c, double d);

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    double max_abs() const;

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    /// Inverse assuming det = 1 (the adjugate).
    Mat2 inverse() const { return {d, -b, -c, a}; }
    Mat2 canonical() const;

    /// Distance in PSL: min over the sign of max-entry difference.
    double psl_distance(const Mat2& o) const;

    bool is_hyperbolic(double eps = kDefaultEps) const;
};

LorentzLinear adjoint_to_so21(const Mat2& m, double eps = kDefaultEps);

/// Traceless 2x2 matrix <-> Minkowski coordinates in the adjoint basis.
MinkowskiVector traceless_coords(const Mat2& x);
Mat2 traceless_matrix(const MinkowskiVector& v);

/// Point of the hyperboloid <v,v> = -1, t > 0.
class HyperbolicPoint {
public:
    HyperbolicPoint() : v_{0.0, 0.0, 1.0} {}

    /// Projects a future timelike vector onto the hyperboloid.
    static HyperbolicPoint project(const MinkowskiVector& v, double eps = kDefaultEps);
    static HyperbolicPoint apex() { return {}; }
    static HyperbolicPoint from_upper_half_plane(std::complex<double> z);
    /// Point at hyperbolic polar coordinates about the apex.
    static HyperbolicPoint polar(double radius, double angle);

    const MinkowskiVector& vec() const { return v_; }
    std::complex<double> to_upper_half_plane() const;

    HyperbolicPoint transformed(const LorentzLinear& a) const;
    HyperbolicPoint transformed(const Mat2& m) const;

private:
    explicit HyperbolicPoint(const MinkowskiVector& v) : v_(v) {}
    MinkowskiVector v_;
};

/// arccosh(-<p,q>); throws DegenerateGeometry when -<p,q> < 1 - eps.
double h2_distance(const HyperbolicPoint& p, const HyperbolicPoint& q, double eps = kDefaultEps);

/// Point on the geodesic from p to q at arclength fraction s in [0, 1].
HyperbolicPoint h2_lerp(const HyperbolicPoint& p, const HyperbolicPoint& q, double s);

/// Point of RP^1 = boundary of H^2, stored as the unit vector (cos pi th, sin pi th)
/// with th in [0, 1).  z = p/q in the upper half plane chart.
class IdealPoint {
public:
    IdealPoint() = default;
    static IdealPoint from_vector(double p, double q);
    static IdealPoint from_angle(double theta);
    /// z in R; use from_vector(1, 0) for infinity.
    static IdealPoint from_real(double z) { return from_vector(z, 1.0); }

    double theta() const { return theta_; }
    double p() const { return p_; }
    double q() const { return q_; }

    /// Future null vector with t = 1.
    MinkowskiVector null_vector() const;
    IdealPoint transformed(const Mat2& m) const;

    /// Distance on R/Z between angles.
    double circle_distance(const IdealPoint& o) const;

private:
    double p_ = 1.0, q_ = 0.0, theta_ = 0.0;
};

/// Unit spacelike normal of the plane through the origin containing the null
/// directions of e1 and e2.  Orientation: minkowski_cross(N(e1), N(e2)).
MinkowskiVector geodesic_normal(const IdealPoint& e1, const IdealPoint& e2, double eps = kDefaultEps);

/// As above, flipped so that <n, side> > 0.
MinkowskiVector geodesic_normal(const IdealPoint& e1, const IdealPoint& e2,
                                const MinkowskiVector& side, double eps = kDefaultEps);

}  // namespace ccs
