#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "ccs/error.hpp"
#include "ccs/hull3d.hpp"

using namespace ccs;
using hull::Point3;

namespace {

double signed_volume(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
    const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
    const double wx = d[0] - a[0], wy = d[1] - a[1], wz = d[2] - a[2];
    return ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
}

void check_convex(const std::vector<Point3>& pts, const hull::Hull3& h) {
    for (const auto& t : h.triangles)
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(hull::orient3d(pts[t[0]], pts[t[1]], pts[t[2]], pts[i]) <= 0);
}

}  // namespace

TEST_CASE("orientation predicate") {
    const Point3 o{0, 0, 0}, x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    CHECK(hull::orient3d(o, x, y, z) == 1);
    CHECK(hull::orient3d(o, y, x, z) == -1);
    CHECK(hull::orient3d(o, x, y, Point3{0.3, 0.2, 0.0}) == 0);

    // nearly coplanar: the exact sign is that of the perturbation
    const std::size_t before = hull::orient3d_fallbacks();
    const Point3 a{0.1, 0.1, 0.1}, b{1e8 + 0.3, 0.7, 0.2}, c{0.5, 1e8 + 0.1, 0.3};
    const Point3 d{a[0] + b[0] - c[0], a[1] + b[1] - c[1], a[2] + b[2] - c[2]};  // on the plane (up to rounding)
    const int s = hull::orient3d(a, b, c, d);
    CHECK(s == hull::orient3d(b, c, a, d));
    CHECK(-s == hull::orient3d(b, a, c, d));
    CHECK(hull::orient3d_fallbacks() > before);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const Point3 p{u(rng), u(rng), u(rng)}, q{u(rng), u(rng), u(rng)}, r{u(rng), u(rng), u(rng)}, w{u(rng), u(rng), u(rng)};
        const double v = signed_volume(p, q, r, w);
        if (std::abs(v) > 1e-6) CHECK(hull::orient3d(p, q, r, w) == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("cube") {
    std::vector<Point3> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
    pts.push_back({0.5, 0.5, 0.5});  // interior
    pts.push_back({0.5, 0.5, 0.0});  // on a face
    const hull::Hull3 h = hull::convex_hull(pts);
    CHECK(!h.flat);
    check_convex(pts, h);
    std::set<std::size_t> used;
    for (const auto& t : h.triangles) used.insert(t.begin(), t.end());
    CHECK(used.count(8) == 0u);

    const hull::MergedHull m = hull::merge_coplanar(pts, h);
    CHECK(m.faces.size() == 6u);
    CHECK(m.edges.size() == 12u);
    for (const auto& f : m.faces) {
        const double len = std::sqrt(f.normal[0] * f.normal[0] + f.normal[1] * f.normal[1] + f.normal[2] * f.normal[2]);
        CHECK(len == doctest::Approx(1.0));
        CHECK(f.boundary.size() >= 4u);
    }
    CHECK(m.triangle_face.size() == h.triangles.size());
}

TEST_CASE("random points and Euler characteristic") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Point3> pts;
        for (int i = 0; i < 300; ++i) {
            Point3 p{g(rng), g(rng), g(rng)};
            if (trial % 2 == 0) {  // on a sphere: every point is a vertex
                const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
                for (double& c : p) c /= n;
            }
            pts.push_back(p);
        }
        const hull::Hull3 h = hull::convex_hull(pts);
        check_convex(pts, h);
        std::set<std::size_t> verts;
        for (const auto& t : h.triangles) verts.insert(t.begin(), t.end());
        const std::size_t f = h.triangles.size(), e = 3 * f / 2;
        CHECK(verts.size() + f == e + 2);
        if (trial % 2 == 0) CHECK(verts.size() == pts.size());
    }
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(hull::convex_hull({{0, 0, 0}, {1, 1, 1}}), DegenerateGeometry);
    CHECK_THROWS_AS(hull::convex_hull({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}}), DegenerateGeometry);
    CHECK_THROWS_AS(hull::convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {NAN, 0, 0}}), InvalidInput);

    std::vector<Point3> flat;
    for (int i = 0; i < 20; ++i) flat.push_back({std::cos(i * 0.3), std::sin(i * 0.3), 2.0});
    const hull::Hull3 h = hull::convex_hull(flat);
    CHECK(h.flat);
    CHECK(h.triangles.empty());
    CHECK(std::abs(std::abs(h.flat_plane[2]) - 1.0) < 1e-12);

    // duplicated points do not break the hull
    std::vector<Point3> dup = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {0, 0, 0}};
    const hull::Hull3 t = hull::convex_hull(dup);
    CHECK(t.triangles.size() == 4u);
}
