#pragma once

// Anti-de Sitter space as the region AD - BC > 0 of RP^3, bounded by the
// quadric Q: AD - BC = 0.  A vector (A, B, C, D) is the matrix [[A, B], [C, D]];
// Q is the Segre image of RP^1 x RP^1 with left coordinate (A:C) and right
// coordinate (A:B).
//
// A spacelike plane (e:f:g:h) (eh - gf > 0) meets Q in the graph of the
// Moebius map v -> M v with M = [[f, h], [-e, -g]]; the plane b = c carries
// the identity.
//
// Time orientation: at a point p the vector p J, J = [[0, 1], [-1, 0]], is the
// future direction (right multiplication by the rotation subgroup).  A hull
// face is future when p J leaves the hull at its centroid.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ccs/earthquake.hpp"
#include "ccs/hull3d.hpp"

namespace ccs {

struct R22Vector {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    static R22Vector from_matrix(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }
    Mat2 matrix() const { return {a, b, c, d}; }

    R22Vector operator+(const R22Vector& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    R22Vector operator-(const R22Vector& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    R22Vector operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    double max_abs() const;
};

/// q(v) = AD - BC.
double q_form(const R22Vector& v);
/// Polarization of q: q(u + v) = q(u) + 2 q_pair(u, v) + q(v).
double q_pair(const R22Vector& u, const R22Vector& v);

/// Projective pair (X : Y), not both zero.
using ProjectivePair = std::array<double, 2>;

/// (X1 X2 : X1 Y2 : Y1 X2 : Y1 Y2).  Throws InvalidInput on a zero pair.
R22Vector segre(const ProjectivePair& left, const ProjectivePair& right);

/// Inverse of segre up to scaling; throws InvalidInput off the quadric.
std::pair<ProjectivePair, ProjectivePair> rulings_of(const R22Vector& p, double eps = kDefaultEps);

/// True when the pairs agree projectively within eps.
bool same_projective(const ProjectivePair& x, const ProjectivePair& y, double eps = kDefaultEps);

/// Covector (e:f:g:h) acting by Ae + Bf + Cg + Dh.
struct ProjectivePlane {
    double e = 0.0, f = 0.0, g = 0.0, h = 0.0;

    double operator()(const R22Vector& p) const { return p.a * e + p.b * f + p.c * g + p.d * h; }
    ProjectivePlane operator*(double s) const { return {e * s, f * s, g * s, h * s}; }
    double discriminant() const { return e * h - g * f; }
    double max_abs() const;
};

enum class PlaneClass { Spacelike, Null, Lorentzian };

const char* to_string(PlaneClass c);

/// Sign of eh - gf relative to eps * |P|^2.  Throws InvalidInput on zero.
PlaneClass plane_classify(const ProjectivePlane& p, double eps = kDefaultEps);

/// Pole of the plane: (h, -g, -f, e).
R22Vector dual_point(const ProjectivePlane& p);
/// Polar plane of a point: (d, -c, -b, a).
ProjectivePlane dual_plane(const R22Vector& p);

/// Moebius map of a spacelike plane, normalized to det 1.
Mat2 plane_map(const ProjectivePlane& p, double eps = kDefaultEps);
/// Plane whose section of Q is the graph of m.
ProjectivePlane plane_of_map(const Mat2& m);

/// Plane z = k of the chart W = 1 with (x, y, z) = (X, Y, Z) / W, where
/// W = (A + D)/2, X = (A - D)/2, Y = (B + C)/2, Z = (B - C)/2.
ProjectivePlane height_plane(double k);
/// Chart coordinates (x, y, z) of a point with A + D != 0.
std::array<double, 3> height_chart(const R22Vector& p);

/// AdS distance between two points of AdS (q > 0): arccosh of |q_pair| / sqrt(q q').
/// Throws DegenerateGeometry when the points are timelike separated.
double ads_distance(const R22Vector& p, const R22Vector& q, double eps = kDefaultEps);

struct GraphSample {
    double left = 0.0;   // source angle in [0, 1)
    double right = 0.0;  // target angle in [0, 1)
    double lift = 0.0;   // continuous lift of the target
};

/// Sampled graph of a monotone degree-one circle map RP^1_L -> RP^1_R.
class CircleGraph {
public:
    CircleGraph() = default;

    /// Sorts by source angle, checks cyclic monotonicity (InvalidInput otherwise)
    /// and builds the continuous lift.  Needs at least 3 samples.
    static CircleGraph from_pairs(std::vector<std::pair<double, double>> pairs, double eps = 1e-12);
    static CircleGraph of_mobius(const Mat2& m, int n);
    static CircleGraph of_circle_map(const CircleMap& m);

    const std::vector<GraphSample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

    /// segre(u(left), u(lift)) with u(t) = (cos pi t, sin pi t): a closed loop in R^4.
    R22Vector point(std::size_t i) const;
    std::vector<R22Vector> points() const;

    /// Image under (g, h) in G_L x G_R: left -> g left, right -> h right.
    CircleGraph transformed(const Mat2& g, const Mat2& h) const;

    std::vector<std::pair<double, double>> pairs() const;

private:
    std::vector<GraphSample> samples_;
};

/// Graph of the single-leaf left earthquake of shear log s (identity on the
/// negative reals, multiplication by s on the positive ones), n samples.
CircleGraph shear_graph(double s, int n);

/// Points of the twisted quadrilaterals between cyclically consecutive
/// samples: every monotone interpolation of the graph lies in their union.
std::vector<R22Vector> graph_envelope(const CircleGraph& g, int per_side);

/// True when the plane has one strict sign on all points (margin eps relative).
bool plane_avoids(const ProjectivePlane& p, const std::vector<R22Vector>& pts, double eps = 1e-12);

/// A spacelike plane with positive incidence on every sample, from the family
/// of planes z = k (k = tan beta, including the plane at infinity W = 0),
/// choosing beta in the middle of the admissible range.
ProjectivePlane disjoint_spacelike_plane(const CircleGraph& g);

/// Affine chart determined by a plane positive on the points of interest.
struct AffineChart {
    ProjectivePlane plane;
    std::array<std::array<double, 4>, 4> rows{};  // orthonormal; rows[0] is the plane direction

    static AffineChart from_plane(const ProjectivePlane& p);
    hull::Point3 operator()(const R22Vector& p) const;
    /// Representative with plane(p) = 1.
    R22Vector normalized(const R22Vector& p) const;
    /// Covector of the chart half-space normal . x <= offset, nonnegative inside.
    ProjectivePlane covector(const hull::Point3& normal, double offset) const;
};

struct HullFace {
    ProjectivePlane plane;              // >= 0 on the hull, for chart-normalized representatives
    std::vector<std::size_t> vertices;  // boundary cycle, graph sample indices
    bool future = false;
    PlaneClass kind = PlaneClass::Spacelike;
};

struct HullEdge {
    std::size_t a = 0, b = 0;    // graph sample indices of the endpoints
    std::size_t f0 = 0, f1 = 0;  // faces
};

struct HullComplex {
    CircleGraph graph;
    AffineChart chart;
    std::vector<R22Vector> vertices;  // chart-normalized graph points
    std::vector<hull::Point3> chart_points;
    std::vector<std::array<std::size_t, 3>> triangles;
    std::vector<std::size_t> triangle_face;
    std::vector<HullFace> faces;
    std::vector<HullEdge> edges;
    bool flat = false;

    std::vector<std::size_t> future_faces() const;
    std::vector<std::size_t> past_faces() const;
    /// max over faces and vertices of max(0, -plane(v)) / |plane|.
    double convexity_violation() const;
    /// max over vertices of |q| / |v|^2.
    double quadric_residual() const;
};

/// Convex hull of the graph in the chart of the given plane (InvalidInput if
/// the plane meets the samples).  A planar graph gives a flat hull with one face.
HullComplex convex_hull(const CircleGraph& g, const ProjectivePlane& chart_plane, double merge_tol = 1e-9);
HullComplex convex_hull(const CircleGraph& g, double merge_tol = 1e-9);

struct BendingDatum {
    std::size_t a = 0, b = 0;  // graph sample indices
    R22Vector start, end;
    ProjectivePlane plane0, plane1;
    std::size_t f0 = 0, f1 = 0;
    double weight = 0.0;
};

/// Edges between two future faces with the dual-point distance of the faces.
/// Throws DegenerateGeometry on a null face.
std::vector<BendingDatum> bending_data(const HullComplex& h, double eps = kDefaultEps);

struct ExtractedFace {
    std::size_t face = 0;
    Mat2 map;    // Moebius map of the face plane, left -> right
    Mat2 left;   // g(T): (g, 1) moves the face plane to the plane b = c
    Mat2 right;  // h(T): (1, h) moves the face plane to the plane b = c
};

struct ExtractedShear {
    std::size_t a = 0, b = 0;  // graph sample indices of the bending line
    IdealPoint first, second;  // its endpoints on RP^1_L
    std::size_t f0 = 0, f1 = 0;
    double shear = 0.0;        // translation length of map0^{-1} map1
};

struct ExtractedEarthquake {
    std::vector<ExtractedFace> faces;
    std::vector<ExtractedShear> shears;
    CircleMap boundary;
    double total_shear() const;
};

/// Piecewise-Moebius left earthquake read off the future boundary.
ExtractedEarthquake extract_left_earthquake(const HullComplex& h, double eps = kDefaultEps);

struct ConjugacyOptions {
    double eps = 1e-9;               // angular dedupe
    std::size_t max_samples = 3000;  // shortest words first
};

/// Pairs attracting fixed points of rho_L(w) and rho_R(w) over the ball of
/// radius L.  Throws NotHyperbolic on an elliptic or parabolic element and
/// InvalidInput on a non-monotone pairing.
CircleGraph sample_conjugacy(const Representation& left, const Representation& right, int radius,
                             const ConjugacyOptions& opt = {});

enum class Membership { Inside, Outside, Indeterminate };

const char* to_string(Membership m);

/// Whether the polar plane of p misses the sampled graph (one strict sign along
/// the loop).  Planar graphs and near-zero incidences are Indeterminate.
Membership dependence_membership(const Mat2& p, const CircleGraph& g, double eps = 1e-9);

/// Plane through the graph when all samples are coplanar within eps.
std::optional<ProjectivePlane> graph_plane(const CircleGraph& g, double eps = 1e-9);

}  // namespace ccs
