#include "ccs/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ccs {

double minkowski_inner(const MinkowskiVector& u, const MinkowskiVector& v) {
    return u.x * v.x + u.y * v.y - u.t * v.t;
}

double sup_norm(const MinkowskiVector& v) {
    return std::max({std::fabs(v.x), std::fabs(v.y), std::fabs(v.t)});
}

double euclidean_norm(const MinkowskiVector& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.t * v.t); }

MinkowskiVector minkowski_cross(const MinkowskiVector& u, const MinkowskiVector& v) {
    // Euclidean cross product, then G = diag(1, 1, -1).
    return {u.y * v.t - u.t * v.y, u.t * v.x - u.x * v.t, -(u.x * v.y - u.y * v.x)};
}

double det3(const MinkowskiVector& a, const MinkowskiVector& b, const MinkowskiVector& c) {
    return a.x * (b.y * c.t - b.t * c.y) - a.y * (b.x * c.t - b.t * c.x) + a.t * (b.x * c.y - b.y * c.x);
}

const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Timelike:
            return "timelike";
        case CausalClass::Null:
            return "null";
        case CausalClass::Spacelike:
            return "spacelike";
        case CausalClass::Zero:
            return "zero";
    }
    return "?";
}

CausalClass classify(const MinkowskiVector& v, double eps) {
    if (sup_norm(v) < eps) return CausalClass::Zero;
    const double q = minkowski_inner(v, v);
    const double scale = v.x * v.x + v.y * v.y + v.t * v.t;
    if (q > eps * scale) return CausalClass::Spacelike;
    if (q < -eps * scale) return CausalClass::Timelike;
    return CausalClass::Null;
}

// ---------------------------------------------------------------------------
// LorentzLinear

namespace {

constexpr Mat3 kIdentity3{1, 0, 0, 0, 1, 0, 0, 0, 1};
constexpr std::array<double, 3> kG{1.0, 1.0, -1.0};

Mat3 mul3(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
            r[3 * i + j] = s;
        }
    return r;
}

double det_mat3(const Mat3& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double form_residual_of(const Mat3& m) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += m[3 * k + i] * kG[k] * m[3 * k + j];
            const double target = i == j ? kG[i] : 0.0;
            worst = std::max(worst, std::fabs(s - target));
        }
    return worst;
}

}  // namespace

LorentzLinear::LorentzLinear() : m_(kIdentity3) {}

LorentzLinear LorentzLinear::from_matrix(const Mat3& m, double eps) {
    const double scale = std::max(1.0, *std::max_element(m.begin(), m.end(), [](double a, double b) {
        return std::fabs(a) < std::fabs(b);
    }));
    const double tol = eps * scale * scale;
    if (form_residual_of(m) > tol) throw InvalidInput("matrix does not preserve the Minkowski form");
    if (std::fabs(det_mat3(m) - 1.0) > tol) throw InvalidInput("Lorentz matrix must have det 1");
    if (m[8] < 1.0 - tol) throw InvalidInput("Lorentz matrix is not orthochronous");
    return LorentzLinear(m);
}

LorentzLinear LorentzLinear::unchecked(const Mat3& m) { return LorentzLinear(m); }

MinkowskiVector LorentzLinear::apply(const MinkowskiVector& v) const {
    return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.t, m_[3] * v.x + m_[4] * v.y + m_[5] * v.t,
            m_[6] * v.x + m_[7] * v.y + m_[8] * v.t};
}

LorentzLinear LorentzLinear::operator*(const LorentzLinear& o) const { return LorentzLinear(mul3(m_, o.m_)); }

LorentzLinear LorentzLinear::inverse() const {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[3 * i + j] = kG[i] * m_[3 * j + i] * kG[j];
    return LorentzLinear(r);
}

double LorentzLinear::form_residual() const { return form_residual_of(m_); }

double LorentzLinear::max_abs_diff(const LorentzLinear& o) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < 9; ++i) worst = std::max(worst, std::fabs(m_[i] - o.m_[i]));
    return worst;
}

LorentzLinear boost_y_fixed(double lambda) {
    const double ch = std::cosh(lambda), sh = std::sinh(lambda);
    return LorentzLinear::unchecked({ch, 0, sh, 0, 1, 0, sh, 0, ch});
}

LorentzLinear rotation_t_fixed(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return LorentzLinear::unchecked({c, -s, 0, s, c, 0, 0, 0, 1});
}

double LorentzIsometry::max_abs_diff(const LorentzIsometry& o) const {
    return std::max(linear.max_abs_diff(o.linear), sup_norm(translation - o.translation));
}

// ---------------------------------------------------------------------------
// Mat2

double Mat2::max_abs() const { return std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)}); }

Mat2 Mat2::canonical() const {
    for (double v : {a, b, c, d}) {
        if (v > 0.0) return *this;
        if (v < 0.0) return {-a, -b, -c, -d};
    }
    return *this;
}

Mat2 Mat2::unimodular(double a, double b, double c, double d, double eps) {
    Mat2 m{a, b, c, d};
    const double s = std::max(1.0, m.max_abs());
    if (!std::isfinite(m.det()) || std::fabs(m.det() - 1.0) > eps * s * s) {
        std::ostringstream os;
        os << "matrix is not unimodular (det = " << m.det() << ")";
        throw InvalidInput(os.str());
    }
    return m.canonical();
}

Mat2 Mat2::normalized(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (!(det > 0.0)) throw InvalidInput("matrix must have positive determinant");
    const double s = 1.0 / std::sqrt(det);
    return Mat2{a * s, b * s, c * s, d * s}.canonical();
}

double Mat2::psl_distance(const Mat2& o) const {
    auto diff = [](const Mat2& x, const Mat2& y) {
        return std::max({std::fabs(x.a - y.a), std::fabs(x.b - y.b), std::fabs(x.c - y.c), std::fabs(x.d - y.d)});
    };
    return std::min(diff(*this, o), diff(*this, Mat2{-o.a, -o.b, -o.c, -o.d}));
}

bool Mat2::is_hyperbolic(double eps) const { return std::fabs(trace()) > 2.0 + eps; }

MinkowskiVector traceless_coords(const Mat2& x) { return {(x.b + x.c) / 2.0, x.a, (x.b - x.c) / 2.0}; }

Mat2 traceless_matrix(const MinkowskiVector& v) { return {v.y, v.x + v.t, v.x - v.t, -v.y}; }

LorentzLinear adjoint_to_so21(const Mat2& m, double eps) {
    const double s = std::max(1.0, m.max_abs());
    if (std::fabs(m.det() - 1.0) > eps * s * s) throw InvalidInput("adjoint_to_so21: matrix is not unimodular");
    const Mat2 inv = m.inverse();
    Mat3 r{};
    const MinkowskiVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int j = 0; j < 3; ++j) {
        const MinkowskiVector col = traceless_coords(m * traceless_matrix(basis[j]) * inv);
        r[0 * 3 + j] = col.x;
        r[1 * 3 + j] = col.y;
        r[2 * 3 + j] = col.t;
    }
    return LorentzLinear::unchecked(r);
}

// ---------------------------------------------------------------------------
// HyperbolicPoint

HyperbolicPoint HyperbolicPoint::project(const MinkowskiVector& v, double eps) {
    const double q = minkowski_inner(v, v);
    if (!(q < -eps * (v.x * v.x + v.y * v.y + v.t * v.t)) || v.t <= 0.0)
        throw InvalidInput("hyperbolic point must be a future timelike vector");
    return HyperbolicPoint(v * (1.0 / std::sqrt(-q)));
}

HyperbolicPoint HyperbolicPoint::from_upper_half_plane(std::complex<double> z) {
    if (!(z.imag() > 0.0)) throw InvalidInput("upper half plane point needs Im z > 0");
    const double sv = std::sqrt(z.imag());
    const Mat2 g{sv, z.real() / sv, 0.0, 1.0 / sv};
    return apex().transformed(g);
}

HyperbolicPoint HyperbolicPoint::polar(double radius, double angle) {
    const double sh = std::sinh(radius);
    return HyperbolicPoint({sh * std::cos(angle), sh * std::sin(angle), std::cosh(radius)});
}

std::complex<double> HyperbolicPoint::to_upper_half_plane() const {
    // Fixed point in H^2 of the elliptic element traceless_matrix(v).
    return std::complex<double>(v_.y, -1.0) / (v_.x - v_.t);
}

HyperbolicPoint HyperbolicPoint::transformed(const LorentzLinear& a) const {
    MinkowskiVector w = a.apply(v_);
    const double q = -minkowski_inner(w, w);
    return HyperbolicPoint(w * (1.0 / std::sqrt(q)));
}

HyperbolicPoint HyperbolicPoint::transformed(const Mat2& m) const {
    return transformed(adjoint_to_so21(m, 1e-6));
}

double h2_distance(const HyperbolicPoint& p, const HyperbolicPoint& q, double eps) {
    const double c = -minkowski_inner(p.vec(), q.vec());
    if (c < 1.0 - eps) throw DegenerateGeometry("h2_distance: points are not on the hyperboloid");
    return std::acosh(std::max(1.0, c));
}

HyperbolicPoint h2_lerp(const HyperbolicPoint& p, const HyperbolicPoint& q, double s) {
    const double d = std::acosh(std::max(1.0, -minkowski_inner(p.vec(), q.vec())));
    if (d < 1e-15) return p;
    const double wp = std::sinh((1.0 - s) * d), wq = std::sinh(s * d);
    return HyperbolicPoint::project(p.vec() * wp + q.vec() * wq, 0.0);
}

// ---------------------------------------------------------------------------
// IdealPoint

IdealPoint IdealPoint::from_vector(double p, double q) {
    const double n = std::hypot(p, q);
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("ideal point needs a nonzero vector");
    double th = std::atan2(q, p) / std::numbers::pi;
    IdealPoint r;
    r.p_ = p / n;
    r.q_ = q / n;
    if (th < 0.0) {
        th += 1.0;
        r.p_ = -r.p_;
        r.q_ = -r.q_;
    }
    if (th >= 1.0) {
        th -= 1.0;
        r.p_ = -r.p_;
        r.q_ = -r.q_;
    }
    r.theta_ = th;
    return r;
}

IdealPoint IdealPoint::from_angle(double theta) {
    const double th = theta - std::floor(theta);
    return from_vector(std::cos(std::numbers::pi * th), std::sin(std::numbers::pi * th));
}

MinkowskiVector IdealPoint::null_vector() const {
    return {p_ * p_ - q_ * q_, -2.0 * p_ * q_, 1.0};
}

IdealPoint IdealPoint::transformed(const Mat2& m) const {
    return from_vector(m.a * p_ + m.b * q_, m.c * p_ + m.d * q_);
}

double IdealPoint::circle_distance(const IdealPoint& o) const {
    double d = std::fabs(theta_ - o.theta_);
    return std::min(d, 1.0 - d);
}

MinkowskiVector geodesic_normal(const IdealPoint& e1, const IdealPoint& e2, double eps) {
    if (e1.circle_distance(e2) < eps) throw DegenerateGeometry("geodesic_normal: coincident endpoints");
    const MinkowskiVector n = minkowski_cross(e1.null_vector(), e2.null_vector());
    return n * (1.0 / std::sqrt(minkowski_inner(n, n)));
}

MinkowskiVector geodesic_normal(const IdealPoint& e1, const IdealPoint& e2, const MinkowskiVector& side,
                                double eps) {
    MinkowskiVector n = geodesic_normal(e1, e2, eps);
    return minkowski_inner(n, side) < 0.0 ? -n : n;
}

}  // namespace ccs
