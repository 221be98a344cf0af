#include "ccs/hull3d.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ccs/error.hpp"

namespace ccs::hull {

namespace {

using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<512>>;

std::atomic<std::size_t> g_fallbacks{0};

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Point3 cross(const Point3& a, const Point3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

int orient_wide(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    Wide u[3], v[3], w[3];
    for (int i = 0; i < 3; ++i) {
        u[i] = Wide(b[i]) - Wide(a[i]);
        v[i] = Wide(c[i]) - Wide(a[i]);
        w[i] = Wide(d[i]) - Wide(a[i]);
    }
    const Wide det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                     u[2] * (v[0] * w[1] - v[1] * w[0]);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

std::uint64_t edge_key(std::size_t u, std::size_t v) { return (static_cast<std::uint64_t>(u) << 32) | v; }

}  // namespace

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    const Point3 u = sub(b, a), v = sub(c, a), w = sub(d, a);
    const double m0 = v[1] * w[2] - v[2] * w[1];
    const double m1 = v[0] * w[2] - v[2] * w[0];
    const double m2 = v[0] * w[1] - v[1] * w[0];
    const double det = u[0] * m0 - u[1] * m1 + u[2] * m2;
    const double perm = std::fabs(u[0]) * (std::fabs(v[1] * w[2]) + std::fabs(v[2] * w[1])) +
                        std::fabs(u[1]) * (std::fabs(v[0] * w[2]) + std::fabs(v[2] * w[0])) +
                        std::fabs(u[2]) * (std::fabs(v[0] * w[1]) + std::fabs(v[1] * w[0]));
    // differences are rounded too; a loose bound keeps the filter honest
    const double bound = 1e-13 * perm;
    if (det > bound) return 1;
    if (det < -bound) return -1;
    ++g_fallbacks;
    return orient_wide(a, b, c, d);
}

std::size_t orient3d_fallbacks() { return g_fallbacks.load(); }

Hull3 convex_hull(const std::vector<Point3>& pts, double flat_tol) {
    const std::size_t n = pts.size();
    if (n >= (std::size_t{1} << 31)) throw InvalidInput("convex_hull: too many points");
    for (const auto& p : pts)
        for (double x : p)
            if (!std::isfinite(x)) throw InvalidInput("convex_hull: non-finite point");
    Hull3 out;
    if (n < 3) throw DegenerateGeometry("convex_hull needs at least 3 points");

    Point3 lo = pts[0], hi = pts[0];
    for (const auto& p : pts)
        for (int i = 0; i < 3; ++i) lo[i] = std::min(lo[i], p[i]), hi[i] = std::max(hi[i], p[i]);
    const double scale = std::max(norm(sub(hi, lo)), 1e-300);

    // extreme starting simplex
    std::size_t i0 = 0, i1 = 0, i2 = 0, i3 = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (pts[i][0] < pts[i0][0]) i0 = i;
    double best = -1;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = norm(sub(pts[i], pts[i0]));
        if (d > best) best = d, i1 = i;
    }
    const Point3 dir = sub(pts[i1], pts[i0]);
    best = -1;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = norm(cross(dir, sub(pts[i], pts[i0])));
        if (d > best) best = d, i2 = i;
    }
    Point3 nrm = cross(dir, sub(pts[i2], pts[i0]));
    const double nn = norm(nrm);
    if (nn <= flat_tol * scale * scale) throw DegenerateGeometry("convex_hull: points are collinear");
    for (auto& x : nrm) x /= nn;
    best = -1;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(dot(nrm, sub(pts[i], pts[i0])));
        if (d > best) best = d, i3 = i;
    }
    if (best <= flat_tol * scale) {
        out.flat = true;
        out.flat_plane = {nrm[0], nrm[1], nrm[2], dot(nrm, pts[i0])};
        return out;
    }
    if (orient3d(pts[i0], pts[i1], pts[i2], pts[i3]) == 0) throw DegenerateGeometry("convex_hull: no spanning simplex");

    std::vector<std::array<std::size_t, 3>> faces;
    std::vector<char> alive;
    std::unordered_map<std::uint64_t, std::size_t> edges;
    auto add_face = [&](std::size_t a, std::size_t b, std::size_t c) {
        const std::size_t f = faces.size();
        faces.push_back({a, b, c});
        alive.push_back(1);
        edges[edge_key(a, b)] = f;
        edges[edge_key(b, c)] = f;
        edges[edge_key(c, a)] = f;
    };
    const std::size_t s[4] = {i0, i1, i2, i3};
    const int tri[4][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 3, 1}, {1, 2, 3, 0}};
    for (const auto& t : tri) {
        std::size_t a = s[t[0]], b = s[t[1]], c = s[t[2]];
        if (orient3d(pts[a], pts[b], pts[c], pts[s[t[3]]]) > 0) std::swap(b, c);
        add_face(a, b, c);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(0x5eed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::size_t> visible;
    std::vector<char> is_visible;
    for (std::size_t p : order) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        visible.clear();
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!alive[f]) continue;
            const auto& t = faces[f];
            if (orient3d(pts[t[0]], pts[t[1]], pts[t[2]], pts[p]) > 0) visible.push_back(f);
        }
        if (visible.empty()) continue;
        is_visible.assign(faces.size(), 0);
        for (auto f : visible) is_visible[f] = 1;
        std::vector<std::pair<std::size_t, std::size_t>> horizon;
        for (auto f : visible) {
            const auto& t = faces[f];
            for (int k = 0; k < 3; ++k) {
                const std::size_t a = t[k], b = t[(k + 1) % 3];
                const auto it = edges.find(edge_key(b, a));
                if (it == edges.end()) throw DegenerateGeometry("convex_hull: broken edge map");
                if (!is_visible[it->second]) horizon.emplace_back(a, b);
            }
        }
        for (auto f : visible) {
            alive[f] = 0;
            const auto& t = faces[f];
            for (int k = 0; k < 3; ++k) {
                const auto it = edges.find(edge_key(t[k], t[(k + 1) % 3]));
                if (it != edges.end() && it->second == f) edges.erase(it);
            }
        }
        for (const auto& [a, b] : horizon) add_face(a, b, p);
    }
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (alive[f]) out.triangles.push_back(faces[f]);
    return out;
}

MergedHull merge_coplanar(const std::vector<Point3>& pts, const Hull3& h, double tol) {
    MergedHull out;
    const std::size_t m = h.triangles.size();
    if (h.flat || m == 0) return out;

    Point3 lo = pts[h.triangles[0][0]], hi = lo;
    for (const auto& t : h.triangles)
        for (auto v : t)
            for (int i = 0; i < 3; ++i) lo[i] = std::min(lo[i], pts[v][i]), hi[i] = std::max(hi[i], pts[v][i]);
    const double eps = tol * std::max(norm(sub(hi, lo)), 1e-300);

    std::unordered_map<std::uint64_t, std::size_t> owner;
    std::vector<double> area(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& t = h.triangles[i];
        for (int k = 0; k < 3; ++k) owner[edge_key(t[k], t[(k + 1) % 3])] = i;
        area[i] = norm(cross(sub(pts[t[1]], pts[t[0]]), sub(pts[t[2]], pts[t[0]])));
    }
    std::vector<std::size_t> by_area(m);
    std::iota(by_area.begin(), by_area.end(), 0);
    std::stable_sort(by_area.begin(), by_area.end(), [&](auto a, auto b) { return area[a] > area[b]; });

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    out.triangle_face.assign(m, none);
    for (std::size_t seed : by_area) {
        if (out.triangle_face[seed] != none) continue;
        const auto& st = h.triangles[seed];
        Point3 n = cross(sub(pts[st[1]], pts[st[0]]), sub(pts[st[2]], pts[st[0]]));
        const double nn = norm(n);
        for (auto& x : n) x /= nn;
        MergedFace face;
        face.normal = n;
        face.offset = dot(n, pts[st[0]]);
        const std::size_t fid = out.faces.size();
        std::vector<std::size_t> stack{seed};
        out.triangle_face[seed] = fid;
        while (!stack.empty()) {
            const std::size_t t = stack.back();
            stack.pop_back();
            face.triangles.push_back(t);
            const auto& tv = h.triangles[t];
            for (int k = 0; k < 3; ++k) {
                const auto it = owner.find(edge_key(tv[(k + 1) % 3], tv[k]));
                if (it == owner.end()) continue;
                const std::size_t u = it->second;
                if (out.triangle_face[u] != none) continue;
                bool flat = true;
                for (auto v : h.triangles[u]) flat = flat && std::fabs(dot(n, pts[v]) - face.offset) <= eps;
                if (!flat) continue;
                out.triangle_face[u] = fid;
                stack.push_back(u);
            }
        }
        out.faces.push_back(std::move(face));
    }

    // boundary cycles and face adjacency
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> shared;
    for (std::size_t f = 0; f < out.faces.size(); ++f) {
        std::unordered_map<std::size_t, std::size_t> next;
        for (auto t : out.faces[f].triangles) {
            const auto& tv = h.triangles[t];
            for (int k = 0; k < 3; ++k) {
                const std::size_t a = tv[k], b = tv[(k + 1) % 3];
                const std::size_t g = out.triangle_face[owner.at(edge_key(b, a))];
                if (g == f) continue;
                next[a] = b;
                if (f < g) shared[{f, g}].emplace_back(a, b);
            }
        }
        if (next.empty()) continue;
        std::size_t start = next.begin()->first;
        for (const auto& kv : next) start = std::min(start, kv.first);
        std::size_t v = start;
        for (std::size_t guard = 0; guard <= next.size(); ++guard) {
            out.faces[f].boundary.push_back(v);
            const auto it = next.find(v);
            if (it == next.end()) break;
            v = it->second;
            if (v == start) break;
        }
    }
    for (const auto& [key, list] : shared) {
        std::unordered_map<std::size_t, int> degree;
        for (const auto& [a, b] : list) ++degree[a], ++degree[b];
        std::vector<std::size_t> ends;
        for (const auto& [v, d] : degree)
            if (d == 1) ends.push_back(v);
        std::sort(ends.begin(), ends.end());
        if (ends.size() != 2) throw DegenerateGeometry("merge_coplanar: faces meet in more than one edge chain");
        out.edges.push_back({ends[0], ends[1], key.first, key.second});
    }
    return out;
}

}  // namespace ccs::hull
