#include "ccs/ads.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "ccs/fuchsian.hpp"
#include "ccs/kernels.hpp"

namespace ccs {

namespace {

constexpr double kPi = std::numbers::pi;

double norm4(const R22Vector& v) { return std::sqrt(v.a * v.a + v.b * v.b + v.c * v.c + v.d * v.d); }
double norm4(const ProjectivePlane& p) { return std::sqrt(p.e * p.e + p.f * p.f + p.g * p.g + p.h * p.h); }

using Vec4 = std::array<double, 4>;

Vec4 as_vec(const R22Vector& v) { return {v.a, v.b, v.c, v.d}; }
double dot4(const Vec4& x, const Vec4& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]; }

double det3(double a, double b, double c, double d, double e, double f, double g, double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Covector vanishing on u, v, w.
ProjectivePlane cross4(const Vec4& u, const Vec4& v, const Vec4& w) {
    auto minor = [&](int c0, int c1, int c2) {
        return det3(u[c0], u[c1], u[c2], v[c0], v[c1], v[c2], w[c0], w[c1], w[c2]);
    };
    return {minor(1, 2, 3), -minor(0, 2, 3), minor(0, 1, 3), -minor(0, 1, 2)};
}

ProjectivePair unit_pair(double t) { return {std::cos(kPi * t), std::sin(kPi * t)}; }

double wrap01(double t) {
    t -= std::floor(t);
    return t >= 1.0 ? 0.0 : t;
}

// A face is future when the rotation flow p J leaves the hull through it,
// i.e. the nonnegative face covector is negative on p J.
constexpr double kFutureSign = -1.0;

// plane(p_i) / (|plane| |p_i|) through the batched kernel
std::vector<double> relative_incidence(const ProjectivePlane& plane, const std::vector<R22Vector>& pts) {
    const std::size_t n = pts.size();
    std::vector<double> a(n), b(n), c(n), d(n), out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = 1.0 / norm4(pts[i]);
        a[i] = pts[i].a * s, b[i] = pts[i].b * s, c[i] = pts[i].c * s, d[i] = pts[i].d * s;
    }
    const double pn = norm4(plane);
    kernels::incidence({a, b, c, d}, plane.e / pn, plane.f / pn, plane.g / pn, plane.h / pn, out);
    return out;
}

}  // namespace

double R22Vector::max_abs() const { return std::max({std::fabs(a), std::fabs(b), std::fabs(c), std::fabs(d)}); }
double ProjectivePlane::max_abs() const {
    return std::max({std::fabs(e), std::fabs(f), std::fabs(g), std::fabs(h)});
}

double q_form(const R22Vector& v) { return v.a * v.d - v.b * v.c; }

double q_pair(const R22Vector& u, const R22Vector& v) {
    return 0.5 * (u.a * v.d + u.d * v.a - u.b * v.c - u.c * v.b);
}

R22Vector segre(const ProjectivePair& l, const ProjectivePair& r) {
    if ((l[0] == 0.0 && l[1] == 0.0) || (r[0] == 0.0 && r[1] == 0.0)) throw InvalidInput("segre: zero pair");
    return {l[0] * r[0], l[0] * r[1], l[1] * r[0], l[1] * r[1]};
}

std::pair<ProjectivePair, ProjectivePair> rulings_of(const R22Vector& p, double eps) {
    const double n = norm4(p);
    if (n == 0.0) throw InvalidInput("rulings_of: zero vector");
    if (std::fabs(q_form(p)) > eps * n * n) throw InvalidInput("rulings_of: point is off the quadric");
    const ProjectivePair col0{p.a, p.c}, col1{p.b, p.d}, row0{p.a, p.b}, row1{p.c, p.d};
    auto len = [](const ProjectivePair& x) { return std::hypot(x[0], x[1]); };
    const ProjectivePair left = len(col0) >= len(col1) ? col0 : col1;
    const ProjectivePair right = len(row0) >= len(row1) ? row0 : row1;
    const double ln = len(left), rn = len(right);
    return {{left[0] / ln, left[1] / ln}, {right[0] / rn, right[1] / rn}};
}

bool same_projective(const ProjectivePair& x, const ProjectivePair& y, double eps) {
    const double nx = std::hypot(x[0], x[1]), ny = std::hypot(y[0], y[1]);
    if (nx == 0.0 || ny == 0.0) return false;
    return std::fabs(x[0] * y[1] - x[1] * y[0]) <= eps * nx * ny;
}

const char* to_string(PlaneClass c) {
    switch (c) {
        case PlaneClass::Spacelike: return "spacelike";
        case PlaneClass::Null: return "null";
        case PlaneClass::Lorentzian: return "lorentzian";
    }
    return "?";
}

PlaneClass plane_classify(const ProjectivePlane& p, double eps) {
    const double m = p.max_abs();
    if (m == 0.0) throw InvalidInput("plane_classify: zero covector");
    const double d = p.discriminant() / (m * m);
    if (d > eps) return PlaneClass::Spacelike;
    if (d < -eps) return PlaneClass::Lorentzian;
    return PlaneClass::Null;
}

R22Vector dual_point(const ProjectivePlane& p) { return {p.h, -p.g, -p.f, p.e}; }
ProjectivePlane dual_plane(const R22Vector& p) { return {p.d, -p.c, -p.b, p.a}; }

Mat2 plane_map(const ProjectivePlane& p, double eps) {
    if (plane_classify(p, eps) != PlaneClass::Spacelike) throw DegenerateGeometry("plane_map: plane is not spacelike");
    return Mat2::normalized(p.f, p.h, -p.e, -p.g);
}

ProjectivePlane plane_of_map(const Mat2& m) { return {-m.c, m.a, -m.d, m.b}; }

ProjectivePlane height_plane(double k) { return {-0.5 * k, 0.5, -0.5, -0.5 * k}; }

std::array<double, 3> height_chart(const R22Vector& p) {
    const double w = 0.5 * (p.a + p.d);
    if (w == 0.0) throw DegenerateGeometry("height_chart: point at infinity");
    return {0.5 * (p.a - p.d) / w, 0.5 * (p.b + p.c) / w, 0.5 * (p.b - p.c) / w};
}

double ads_distance(const R22Vector& p, const R22Vector& q, double eps) {
    const double qp = q_form(p), qq = q_form(q);
    if (!(qp > 0.0) || !(qq > 0.0)) throw DegenerateGeometry("ads_distance: point not in AdS");
    const double c = std::fabs(q_pair(p, q)) / std::sqrt(qp * qq);
    if (c < 1.0 - eps) throw DegenerateGeometry("ads_distance: points are timelike separated");
    return std::acosh(std::max(1.0, c));
}

// ---------------------------------------------------------------------------
// CircleGraph

CircleGraph CircleGraph::from_pairs(std::vector<std::pair<double, double>> pairs, double eps) {
    if (pairs.size() < 3) throw InvalidInput("circle graph needs at least 3 samples");
    for (auto& [l, r] : pairs) {
        if (!std::isfinite(l) || !std::isfinite(r)) throw InvalidInput("circle graph: non-finite sample");
        l = wrap01(l);
        r = wrap01(r);
    }
    std::sort(pairs.begin(), pairs.end());
    CircleGraph g;
    g.samples_.reserve(pairs.size());
    double lift = pairs[0].second;
    if (lift - pairs[0].first > 0.5) lift -= 1.0;
    if (pairs[0].first - lift > 0.5) lift += 1.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) {
            double step = pairs[i].second - pairs[i - 1].second;
            step -= std::floor(step);
            if (step > 1.0 - eps) step -= 1.0;
            lift += step;
        }
        g.samples_.push_back({pairs[i].first, pairs[i].second, lift});
    }
    const double closing = g.samples_.front().lift + 1.0 - lift;
    if (closing < -eps || closing > 1.0 + eps) {
        std::ostringstream os;
        os << "circle graph is not cyclically monotone (winding excess " << -closing << ")";
        throw InvalidInput(os.str());
    }
    return g;
}

CircleGraph CircleGraph::of_mobius(const Mat2& m, int n) {
    if (n < 3) throw InvalidInput("of_mobius needs n >= 3");
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / n;
        pairs.emplace_back(t, IdealPoint::from_angle(t).transformed(m).theta());
    }
    return from_pairs(std::move(pairs));
}

CircleGraph CircleGraph::of_circle_map(const CircleMap& m) { return from_pairs(m.samples); }

R22Vector CircleGraph::point(std::size_t i) const {
    const auto& s = samples_.at(i);
    return segre(unit_pair(s.left), unit_pair(s.lift));
}

std::vector<R22Vector> CircleGraph::points() const {
    std::vector<R22Vector> out;
    out.reserve(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out.push_back(point(i));
    return out;
}

CircleGraph CircleGraph::transformed(const Mat2& g, const Mat2& h) const {
    std::vector<std::pair<double, double>> pairs;
    for (const auto& s : samples_)
        pairs.emplace_back(IdealPoint::from_angle(s.left).transformed(g).theta(),
                           IdealPoint::from_angle(s.right).transformed(h).theta());
    return from_pairs(std::move(pairs));
}

std::vector<std::pair<double, double>> CircleGraph::pairs() const {
    std::vector<std::pair<double, double>> out;
    for (const auto& s : samples_) out.emplace_back(s.left, s.right);
    return out;
}

CircleGraph shear_graph(double s, int n) {
    if (!(s > 0.0) || !std::isfinite(s)) throw InvalidInput("shear_graph needs s > 0");
    if (n < 4) throw InvalidInput("shear_graph needs n >= 4");
    if (s == 1.0) return CircleGraph::of_mobius(Mat2::identity(), n);
    const double w = std::log(s);
    const EarthquakeMap quake(single_leaf_lamination(std::fabs(w)), QuakeSide::Left, 1.0);
    CircleMap m = boundary_value(quake, n);
    if (n % 2 == 1) m.samples.emplace_back(0.5, 0.5);  // keep the leaf endpoint 0
    if (w < 0.0)  // scale by s < 1: invert the map
        for (auto& [l, r] : m.samples) std::swap(l, r);
    return CircleGraph::of_circle_map(m);
}

std::vector<R22Vector> graph_envelope(const CircleGraph& g, int per_side) {
    if (per_side < 2) throw InvalidInput("graph_envelope needs per_side >= 2");
    std::vector<R22Vector> out;
    const auto& s = g.samples();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool wrap = i + 1 == s.size();
        const GraphSample& p = s[i];
        const double l1 = wrap ? s[0].left + 1.0 : s[i + 1].left;
        const double r1 = wrap ? s[0].lift + 1.0 : s[i + 1].lift;
        for (int u = 0; u <= per_side; ++u)
            for (int v = 0; v <= per_side; ++v) {
                const double tl = p.left + (l1 - p.left) * u / per_side;
                const double tr = p.lift + (r1 - p.lift) * v / per_side;
                out.push_back(segre(unit_pair(tl), unit_pair(tr)));
            }
    }
    return out;
}

bool plane_avoids(const ProjectivePlane& p, const std::vector<R22Vector>& pts, double eps) {
    if (norm4(p) == 0.0) throw InvalidInput("plane_avoids: zero covector");
    int sign = 0;
    for (double v : relative_incidence(p, pts)) {
        const int s = v > eps ? 1 : (v < -eps ? -1 : 0);
        if (s == 0) return false;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return true;
}

ProjectivePlane disjoint_spacelike_plane(const CircleGraph& g) {
    // incidence of the plane -sin(b) W + cos(b) Z on a sample is sin(pi (lift - left) - b) / 2
    double lo = 1e300, hi = -1e300;
    for (const auto& s : g.samples()) {
        const double a = kPi * (s.lift - s.left);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    if (hi - lo >= kPi - 1e-12) throw DegenerateGeometry("disjoint_spacelike_plane: no plane z = k avoids the graph");
    const double beta = 0.5 * (lo + hi) - 0.5 * kPi;
    const double sb = std::sin(beta), cb = std::cos(beta);
    return {-0.5 * sb, 0.5 * cb, -0.5 * cb, -0.5 * sb};
}

// ---------------------------------------------------------------------------
// Chart and hull

AffineChart AffineChart::from_plane(const ProjectivePlane& p) {
    const double n = norm4(p);
    if (n == 0.0) throw InvalidInput("chart plane is zero");
    AffineChart ch;
    ch.plane = p;
    ch.rows[0] = {p.e / n, p.f / n, p.g / n, p.h / n};
    const Vec4 candidates[8] = {{1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}, {1, 0, 0, 1},
                                {1, 0, 0, 0},  {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    int filled = 1;
    for (const auto& c : candidates) {
        if (filled == 4) break;
        Vec4 v = c;
        for (int k = 0; k < filled; ++k) {
            const double d = dot4(v, ch.rows[k]);
            for (int j = 0; j < 4; ++j) v[j] -= d * ch.rows[k][j];
        }
        const double vn = std::sqrt(dot4(v, v));
        if (vn < 0.1) continue;
        for (auto& x : v) x /= vn;
        ch.rows[filled++] = v;
    }
    return ch;
}

hull::Point3 AffineChart::operator()(const R22Vector& p) const {
    const Vec4 v = as_vec(p);
    const double w = dot4(rows[0], v);
    if (w == 0.0) throw DegenerateGeometry("point lies on the chart plane");
    return {dot4(rows[1], v) / w, dot4(rows[2], v) / w, dot4(rows[3], v) / w};
}

R22Vector AffineChart::normalized(const R22Vector& p) const {
    const double w = plane(p);
    if (w == 0.0) throw DegenerateGeometry("point lies on the chart plane");
    return p * (1.0 / w);
}

ProjectivePlane AffineChart::covector(const hull::Point3& normal, double offset) const {
    Vec4 c{};
    for (int j = 0; j < 4; ++j)
        c[j] = offset * rows[0][j] - normal[0] * rows[1][j] - normal[1] * rows[2][j] - normal[2] * rows[3][j];
    const double m = std::max({std::fabs(c[0]), std::fabs(c[1]), std::fabs(c[2]), std::fabs(c[3])});
    return {c[0] / m, c[1] / m, c[2] / m, c[3] / m};
}

std::vector<std::size_t> HullComplex::future_faces() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].future) out.push_back(i);
    return out;
}

std::vector<std::size_t> HullComplex::past_faces() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (!faces[i].future || flat) out.push_back(i);
    return out;
}

double HullComplex::convexity_violation() const {
    double worst = 0.0;
    for (const auto& f : faces) {
        const double pn = norm4(f.plane);
        for (const auto& v : vertices) worst = std::max(worst, -f.plane(v) / (pn * norm4(v)));
    }
    return worst;
}

double HullComplex::quadric_residual() const {
    double worst = 0.0;
    for (const auto& v : vertices) {
        const double n = norm4(v);
        worst = std::max(worst, std::fabs(q_form(v)) / (n * n));
    }
    return worst;
}

std::optional<ProjectivePlane> graph_plane(const CircleGraph& g, double eps) {
    const auto pts = g.points();
    const std::size_t n = pts.size();
    // best-spread triple among a few candidates
    ProjectivePlane best{};
    double best_norm = -1.0;
    for (std::size_t off = 0; off < std::min<std::size_t>(n, 8); ++off) {
        const std::size_t i = off, j = (off + n / 3) % n, k = (off + 2 * n / 3) % n;
        const ProjectivePlane p = cross4(as_vec(pts[i]), as_vec(pts[j]), as_vec(pts[k]));
        const double pn = norm4(p);
        if (pn > best_norm) best_norm = pn, best = p;
    }
    if (best_norm <= 0.0) return std::nullopt;
    for (const auto& x : pts)
        if (std::fabs(best(x)) / (best_norm * norm4(x)) > eps) return std::nullopt;
    return best * (1.0 / best.max_abs());
}

namespace {

bool is_future(const ProjectivePlane& plane, const std::vector<std::size_t>& verts, const std::vector<R22Vector>& pts) {
    R22Vector c;
    for (auto v : verts) c = c + pts[v];
    c = c * (1.0 / static_cast<double>(verts.size()));
    const Mat2 tau = c.matrix() * Mat2{0.0, 1.0, -1.0, 0.0};
    return kFutureSign * plane(R22Vector::from_matrix(tau)) > 0.0;
}

}  // namespace

HullComplex convex_hull(const CircleGraph& g, const ProjectivePlane& chart_plane, double merge_tol) {
    HullComplex hc;
    hc.graph = g;
    const auto pts = g.points();
    ProjectivePlane plane = chart_plane;
    if (!plane_avoids(plane, pts)) throw InvalidInput("convex_hull: chart plane meets the graph samples");
    if (plane(pts[0]) < 0.0) plane = plane * -1.0;
    hc.chart = AffineChart::from_plane(plane);
    for (const auto& p : pts) {
        hc.vertices.push_back(hc.chart.normalized(p));
        hc.chart_points.push_back(hc.chart(p));
    }

    if (const auto flat = graph_plane(g, merge_tol)) {
        hc.flat = true;
        HullFace f;
        f.plane = *flat;
        for (std::size_t i = 0; i < pts.size(); ++i) f.vertices.push_back(i);
        f.future = true;
        f.kind = plane_classify(f.plane);
        hc.faces.push_back(std::move(f));
        return hc;
    }

    const hull::Hull3 h = hull::convex_hull(hc.chart_points, merge_tol);
    if (h.flat) {
        // coplanar in the chart but not caught above: tolerance mismatch
        throw DegenerateGeometry("convex_hull: graph is flat in the chart but not projectively planar");
    }
    const hull::MergedHull m = hull::merge_coplanar(hc.chart_points, h, merge_tol);
    hc.triangles = h.triangles;
    hc.triangle_face = m.triangle_face;
    for (const auto& mf : m.faces) {
        HullFace f;
        f.plane = hc.chart.covector(mf.normal, mf.offset);
        f.vertices = mf.boundary;
        f.kind = plane_classify(f.plane);
        f.future = is_future(f.plane, f.vertices, hc.vertices);
        hc.faces.push_back(std::move(f));
    }
    for (const auto& e : m.edges) hc.edges.push_back({e.a, e.b, e.f0, e.f1});
    return hc;
}

HullComplex convex_hull(const CircleGraph& g, double merge_tol) {
    return convex_hull(g, disjoint_spacelike_plane(g), merge_tol);
}

std::vector<BendingDatum> bending_data(const HullComplex& h, double eps) {
    std::vector<BendingDatum> out;
    if (h.flat) return out;
    for (const auto& e : h.edges) {
        const HullFace& f0 = h.faces[e.f0];
        const HullFace& f1 = h.faces[e.f1];
        if (!f0.future || !f1.future) continue;
        if (plane_classify(f0.plane, eps) != PlaneClass::Spacelike ||
            plane_classify(f1.plane, eps) != PlaneClass::Spacelike)
            throw DegenerateGeometry("bending_data: edge adjacent to a null face");
        BendingDatum d;
        d.a = e.a;
        d.b = e.b;
        d.start = h.vertices[e.a];
        d.end = h.vertices[e.b];
        d.plane0 = f0.plane;
        d.plane1 = f1.plane;
        d.f0 = e.f0;
        d.f1 = e.f1;
        d.weight = ads_distance(dual_point(f0.plane), dual_point(f1.plane), eps);
        out.push_back(d);
    }
    return out;
}

double ExtractedEarthquake::total_shear() const {
    double s = 0.0;
    for (const auto& x : shears) s += x.shear;
    return s;
}

ExtractedEarthquake extract_left_earthquake(const HullComplex& h, double eps) {
    ExtractedEarthquake out;
    std::map<std::size_t, std::size_t> slot;  // face -> index in out.faces
    for (auto f : h.future_faces()) {
        if (plane_classify(h.faces[f].plane, eps) != PlaneClass::Spacelike)
            throw DegenerateGeometry("extract_left_earthquake: null face on the future boundary");
        const Mat2 m = plane_map(h.faces[f].plane, eps);
        slot[f] = out.faces.size();
        out.faces.push_back({f, m, m, m.inverse().canonical()});
    }
    if (out.faces.empty()) throw DegenerateGeometry("extract_left_earthquake: empty future boundary");

    const auto& s = h.graph.samples();
    for (const auto& e : h.edges) {
        if (!slot.count(e.f0) || !slot.count(e.f1)) continue;
        const Mat2 rel = out.faces[slot[e.f0]].map.inverse() * out.faces[slot[e.f1]].map;
        const double tr = std::fabs(rel.trace());
        ExtractedShear x;
        x.a = e.a;
        x.b = e.b;
        x.first = IdealPoint::from_angle(s[e.a].left);
        x.second = IdealPoint::from_angle(s[e.b].left);
        x.f0 = e.f0;
        x.f1 = e.f1;
        x.shear = tr > 2.0 ? 2.0 * std::acosh(tr / 2.0) : 0.0;
        out.shears.push_back(x);
    }

    out.boundary.samples = h.graph.pairs();
    if (h.flat) {
        out.boundary.pieces.push_back({0.0, 1.0, out.faces[0].map});
        return out;
    }
    // arcs between consecutive vertices of the future boundary; a sample
    // touching only past faces lies under a future rim edge
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_face;
    std::map<std::size_t, std::size_t> vertex_face;
    for (const auto& [f, k] : slot) {
        const auto& cyc = h.faces[f].vertices;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const std::size_t a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            edge_face[{std::min(a, b), std::max(a, b)}] = k;
            vertex_face.emplace(a, k);
        }
    }
    std::vector<std::size_t> rim;
    for (const auto& [v, k] : vertex_face) rim.push_back(v);
    for (std::size_t i = 0; i < rim.size(); ++i) {
        const std::size_t a = rim[i], b = rim[(i + 1) % rim.size()];
        std::size_t k = vertex_face[a];
        if (auto it = edge_face.find({std::min(a, b), std::max(a, b)}); it != edge_face.end()) k = it->second;
        out.boundary.pieces.push_back({s[a].left, s[b].left, out.faces[k].map});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conjugacy and membership

CircleGraph sample_conjugacy(const Representation& left, const Representation& right, int radius,
                             const ConjugacyOptions& opt) {
    if (left.genus() != right.genus()) throw InvalidInput("sample_conjugacy: genus mismatch");
    if (radius < 1) throw InvalidInput("sample_conjugacy needs radius >= 1");
    const GroupBall ball = enumerate_ball(left, radius);
    std::set<double> seen;
    std::vector<std::pair<double, double>> pairs;
    auto near = [&](double t) {
        auto it = seen.lower_bound(t - opt.eps);
        if (it != seen.end() && *it <= t + opt.eps) return true;
        if (t < opt.eps && !seen.empty() && *seen.rbegin() >= 1.0 - opt.eps + t) return true;
        if (t > 1.0 - opt.eps && !seen.empty() && *seen.begin() <= t + opt.eps - 1.0) return true;
        return false;
    };
    for (const auto& el : ball.elements) {
        if (el.word.empty()) continue;
        const Axis al = axis(el.matrix);
        const double tl = al.attracting.theta();
        if (near(tl)) continue;
        const Axis ar = axis(evaluate(right, el.word));
        seen.insert(tl);
        pairs.emplace_back(tl, ar.attracting.theta());
        if (opt.max_samples > 0 && pairs.size() >= opt.max_samples) break;
    }
    try {
        return CircleGraph::from_pairs(std::move(pairs), opt.eps);
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("sample_conjugacy: non-monotone pairing: ") + e.what());
    }
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Inside: return "inside";
        case Membership::Outside: return "outside";
        case Membership::Indeterminate: return "indeterminate";
    }
    return "?";
}

Membership dependence_membership(const Mat2& p, const CircleGraph& g, double eps) {
    const R22Vector v = R22Vector::from_matrix(p);
    const double qv = q_form(v), nv = norm4(v);
    if (!(qv > eps * nv * nv)) throw InvalidInput("dependence_membership: point is not in AdS");
    if (graph_plane(g, eps)) return Membership::Indeterminate;
    int sign = 0;
    for (double val : relative_incidence(dual_plane(v), g.points())) {
        if (std::fabs(val) <= eps) return Membership::Indeterminate;
        const int s = val > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return Membership::Outside;
    }
    return Membership::Inside;
}

}  // namespace ccs
