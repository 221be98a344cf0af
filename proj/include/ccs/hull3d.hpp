#pragma once

// Incremental convex hull in R^3 with a filtered orientation predicate and
// coplanar-face merging.

#include <array>
#include <cstddef>
#include <vector>

namespace ccs::hull {

using Point3 = std::array<double, 3>;

/// Sign of det[b - a, c - a, d - a]: +1 when d lies on the side of the
/// triangle (a, b, c) that sees it counter-clockwise.  Evaluated in double
/// with an error bound, falling back to 512-bit floating point.
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// Number of orient3d calls that needed the extended-precision path.
std::size_t orient3d_fallbacks();

struct Hull3 {
    std::vector<std::array<std::size_t, 3>> triangles;  // counter-clockwise seen from outside
    bool flat = false;  // all points within tolerance of one plane
    std::array<double, 4> flat_plane{};  // n . x = c when flat
};

/// Convex hull of the points.  Inputs within `flat_tol` (relative to the
/// bounding box) of a common plane are reported as flat without triangles.
Hull3 convex_hull(const std::vector<Point3>& pts, double flat_tol = 1e-9);

struct MergedFace {
    std::vector<std::size_t> triangles;
    std::vector<std::size_t> boundary;  // vertex cycle, counter-clockwise from outside
    Point3 normal{};                    // outward unit normal
    double offset = 0.0;                // normal . x = offset on the face
};

/// Adjacency of two merged faces along a chain of collinear triangle edges.
struct FaceEdge {
    std::size_t a = 0, b = 0;    // chain endpoints
    std::size_t f0 = 0, f1 = 0;  // adjacent faces
};

struct MergedHull {
    std::vector<MergedFace> faces;
    std::vector<FaceEdge> edges;
    std::vector<std::size_t> triangle_face;  // merged face of each triangle
};

/// Groups adjacent triangles lying within tol (relative to the bounding box)
/// of a common plane.
MergedHull merge_coplanar(const std::vector<Point3>& pts, const Hull3& h, double tol = 1e-9);

}  // namespace ccs::hull
