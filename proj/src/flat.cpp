#include "ccs/flat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "ccs/kernels.hpp"

namespace ccs {

// ---------------------------------------------------------------------------
// Cocycles

namespace {

// Cocycle values of long words involve products of large matrices; the
// recursion is carried out in extended precision and rounded once.
using ld = long double;

struct Mat2x {
    ld a = 1, b = 0, c = 0, d = 1;
    Mat2x operator*(const Mat2x& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

struct Vec3x {
    ld x = 0, y = 0, t = 0;
};

// Adjoint action m X(v) m^{-1} in the basis X(x, y, t) = [[y, x + t], [x - t, -y]].
Vec3x adjoint_apply(const Mat2x& m, const Vec3x& v) {
    const ld p = v.y, q = v.x + v.t, r = v.x - v.t, s = -v.y;
    // m * X
    const ld u11 = m.a * p + m.b * r, u12 = m.a * q + m.b * s;
    const ld u21 = m.c * p + m.d * r, u22 = m.c * q + m.d * s;
    // (m X) * m^{-1}, m^{-1} = [[d, -b], [-c, a]]
    const ld w11 = u11 * m.d - u12 * m.c;
    const ld w12 = -u11 * m.b + u12 * m.a;
    const ld w21 = u21 * m.d - u22 * m.c;
    (void)u22;
    return {(w12 + w21) / 2, w11, (w12 - w21) / 2};
}

struct ExtIsometry {
    Mat2x m;
    Vec3x t;
};

ExtIsometry evaluate_ext(const Representation& rep, const std::vector<MinkowskiVector>& gens, const Word& w) {
    if (static_cast<int>(gens.size()) != 2 * rep.genus())
        throw InvalidInput("cocycle size does not match the representation");
    ExtIsometry r;
    auto accumulate = [&](const Vec3x& v, ld sign) {
        r.t.x += sign * v.x;
        r.t.y += sign * v.y;
        r.t.t += sign * v.t;
    };
    for (int letter : w) {
        const int k = std::abs(letter);
        if (k < 1 || k > 2 * rep.genus()) throw InvalidInput("word letter out of range");
        const Mat2& g = rep.generators()[k - 1];
        const Vec3x tg{gens[k - 1].x, gens[k - 1].y, gens[k - 1].t};
        if (letter > 0) {
            accumulate(adjoint_apply(r.m, tg), 1);
            r.m = r.m * Mat2x{g.a, g.b, g.c, g.d};
        } else {
            r.m = r.m * Mat2x{g.d, -g.b, -g.c, g.a};
            accumulate(adjoint_apply(r.m, tg), -1);
        }
    }
    return r;
}

ld sup_norm_ext(const Vec3x& v) { return std::max({std::fabs(v.x), std::fabs(v.y), std::fabs(v.t)}); }

}  // namespace

LorentzIsometry TranslationCocycle::isometry(const Representation& rep, const Word& w) const {
    const ExtIsometry e = evaluate_ext(rep, gens_, w);
    const Mat2 m{static_cast<double>(e.m.a), static_cast<double>(e.m.b), static_cast<double>(e.m.c),
                 static_cast<double>(e.m.d)};
    return {adjoint_to_so21(m, 1e-6),
            {static_cast<double>(e.t.x), static_cast<double>(e.t.y), static_cast<double>(e.t.t)}};
}

MinkowskiVector TranslationCocycle::evaluate(const Representation& rep, const Word& w) const {
    return isometry(rep, w).translation;
}

TranslationCocycle TranslationCocycle::operator+(const TranslationCocycle& o) const {
    if (gens_.size() != o.gens_.size()) throw InvalidInput("cocycle sizes differ");
    TranslationCocycle r = *this;
    for (std::size_t i = 0; i < gens_.size(); ++i) r.gens_[i] += o.gens_[i];
    return r;
}

TranslationCocycle TranslationCocycle::operator*(double s) const {
    TranslationCocycle r = *this;
    for (auto& v : r.gens_) v = v * s;
    return r;
}

double TranslationCocycle::max_abs_diff(const TranslationCocycle& o) const {
    if (gens_.size() != o.gens_.size()) throw InvalidInput("cocycle sizes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < gens_.size(); ++i) worst = std::max(worst, sup_norm(gens_[i] - o.gens_[i]));
    return worst;
}

TranslationCocycle coboundary(const Representation& rep, const MinkowskiVector& v) {
    std::vector<MinkowskiVector> t;
    for (const auto& g : rep.generators()) t.push_back(v - adjoint_to_so21(g, 1e-6).apply(v));
    return TranslationCocycle(std::move(t));
}

TranslationCocycle cocycle_from_lamination(const Representation& rep, const WeightedMulticurve& mc,
                                           std::optional<HyperbolicPoint> basepoint, const LeafOptions& opt) {
    mc.validate();
    if (mc.curves.empty()) return TranslationCocycle::zero(rep.genus());
    // Window large enough for the apex, a perturbed basepoint and its generator images.
    const HyperbolicPoint probe = basepoint.value_or(HyperbolicPoint::polar(0.5, 0.0));
    double window = h2_distance(HyperbolicPoint::apex(), probe, 1e-6);
    for (const auto& g : rep.generators())
        window = std::max(window, h2_distance(HyperbolicPoint::apex(), probe.transformed(g), 1e-6));
    auto leaves = LeafSet::build(rep, mc, window + 1.0, opt);
    const HyperbolicPoint b = basepoint.value_or(default_basepoint(leaves));
    std::vector<HyperbolicPoint> images;
    for (const auto& g : rep.generators()) images.push_back(b.transformed(g));
    return TranslationCocycle(leaves.transverse_from(b, images));
}

double cocycle_residual(const Representation& rep, const TranslationCocycle& coc, const Word& a, const Word& b) {
    const ExtIsometry ea = evaluate_ext(rep, coc.generators(), a);
    const ExtIsometry eb = evaluate_ext(rep, coc.generators(), b);
    const ExtIsometry eab = evaluate_ext(rep, coc.generators(), concat(a, b));
    const Vec3x moved = adjoint_apply(ea.m, eb.t);
    const Vec3x d{eab.t.x - ea.t.x - moved.x, eab.t.y - ea.t.y - moved.y, eab.t.t - ea.t.t - moved.t};
    return static_cast<double>(sup_norm_ext(d));
}

double relator_residual(const Representation& rep, const TranslationCocycle& coc) {
    return static_cast<double>(sup_norm_ext(evaluate_ext(rep, coc.generators(), rep.presentation().relator()).t));
}

// ---------------------------------------------------------------------------
// Development

MinkowskiVector DevelopedSurfacePatch::field(const HyperbolicPoint& p) const {
    return leaves->transverse(basepoint, p) + offset;
}

MinkowskiVector DevelopedSurfacePatch::field_at_ideal(const MinkowskiVector& null_dir) const {
    return leaves->transverse_to(basepoint, null_dir) + offset;
}

MinkowskiVector DevelopedSurfacePatch::develop_cone(const MinkowskiVector& y) const {
    const double q = -minkowski_inner(y, y);
    if (!(q > 0.0) || y.t <= 0.0) throw InvalidInput("develop_cone needs a future timelike vector");
    return y + field(HyperbolicPoint::project(y, 0.0));
}

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

DevelopedSurfacePatch develop_surface(const Representation& rep, const WeightedMulticurve& mc,
                                      const DevelopOptions& opt) {
    if (!(opt.radius > 0.0)) throw InvalidInput("develop radius must be positive");
    if (opt.density < 1) throw InvalidInput("develop density must be >= 1");
    DevelopedSurfacePatch patch;
    patch.radius = opt.radius;
    patch.offset = opt.offset;
    double window = opt.radius;
    if (opt.basepoint) window = std::max(window, h2_distance(HyperbolicPoint::apex(), *opt.basepoint, 1e-6));
    auto leaves = std::make_shared<LeafSet>(LeafSet::build(rep, mc, window + 0.25, opt.leaf));
    patch.leaves = leaves;
    patch.basepoint = opt.basepoint.value_or(default_basepoint(*leaves));

    std::mt19937_64 rng(opt.seed);
    const double area_max = std::cosh(opt.radius) - 1.0;
    std::vector<HyperbolicPoint> pts;
    std::vector<bool> moved;
    pts.reserve(opt.density);
    for (int i = 0; i < opt.density; ++i) {
        const double u = unit_uniform(rng), v = unit_uniform(rng);
        const double r = std::acosh(1.0 + u * area_max);
        HyperbolicPoint p = HyperbolicPoint::polar(r, 2.0 * std::numbers::pi * v);
        bool flag = false;
        for (int tries = 0; leaves->leaf_at(p) && tries < 64; ++tries) {
            const double rr = std::max(0.0, r - 1e-6 * (tries + 1));
            p = HyperbolicPoint::polar(rr, 2.0 * std::numbers::pi * v + 1e-6 * (tries + 1));
            flag = true;
        }
        pts.push_back(p);
        moved.push_back(flag);
    }
    const auto xs = leaves->transverse_from(patch.basepoint, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const MinkowskiVector x = xs[i] + patch.offset;
        patch.samples.push_back({pts[i], x, pts[i].vec() + x, moved[i]});
    }
    return patch;
}

TranslationCocycle cocycle_of_patch(const Representation& rep, const DevelopedSurfacePatch& patch) {
    std::vector<MinkowskiVector> t;
    for (const auto& g : rep.generators()) {
        const HyperbolicPoint img = patch.basepoint.transformed(g);
        const MinkowskiVector xb = patch.field(patch.basepoint);
        t.push_back(patch.field(img) - adjoint_to_so21(g, 1e-6).apply(xb));
    }
    return TranslationCocycle(std::move(t));
}

InjectivityReport injectivity_gap(const DevelopedSurfacePatch& patch, std::size_t max_pairs) {
    const auto& s = patch.samples;
    if (s.size() < 2) throw InvalidInput("injectivity_gap needs at least two samples");
    InjectivityReport rep;
    rep.min_gap = std::numeric_limits<double>::infinity();
    rep.min_crossing_gap = std::numeric_limits<double>::infinity();
    auto visit = [&](const MinkowskiVector& p, const MinkowskiVector& xp, const MinkowskiVector& q,
                     const MinkowskiVector& xq) {
        const MinkowskiVector d = p - q + (xp - xq);
        const double gap = minkowski_inner(d, d);
        rep.min_gap = std::min(rep.min_gap, gap);
        ++rep.pairs;
        if (sup_norm(xp - xq) > 0.0) {
            rep.min_crossing_gap = std::min(rep.min_crossing_gap, gap);
            ++rep.crossing_pairs;
        }
    };
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (max_pairs && rep.pairs >= max_pairs) return rep;
            const MinkowskiVector& p = s[i].p.vec();
            const MinkowskiVector& q = s[j].p.vec();
            const double c = -minkowski_inner(p, q);
            if (c <= 1.0 + 1e-12) continue;
            // r p - q is null for r = c -+ sqrt(c^2 - 1); the smaller root keeps scales near 1.
            const double r = 1.0 / (c + std::sqrt((c - 1.0) * (c + 1.0)));
            visit(p * r, s[i].x, q, s[j].x);
            visit(p, s[i].x, q * r, s[j].x);
        }
    return rep;
}

double graph_slope_check(const DevelopedSurfacePatch& patch) {
    const auto& s = patch.samples;
    const std::size_t n = s.size();
    if (n < 2) return 0.0;
    std::vector<double> dx, dy, dt, out;
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dx.clear();
        dy.clear();
        dt.clear();
        for (std::size_t j = i + 1; j < n; ++j) {
            const MinkowskiVector d = s[j].f - s[i].f;
            if (d.x == 0.0 && d.y == 0.0) throw DegenerateGeometry("graph_slope_check: coincident projections");
            dx.push_back(d.x);
            dy.push_back(d.y);
            dt.push_back(d.t);
        }
        out.resize(dx.size());
        kernels::chord_slope({dx, dy, dt}, out);
        worst = std::max(worst, *std::max_element(out.begin(), out.end()));
    }
    return worst;
}

std::vector<NullSupportPlane> support_planes(const DevelopedSurfacePatch& patch, int count) {
    if (count < 1) throw InvalidInput("support_planes needs count >= 1");
    std::vector<NullSupportPlane> planes;
    for (int k = 0; k < count; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / count;
        const MinkowskiVector nu{std::cos(phi), std::sin(phi), 1.0};
        const MinkowskiVector x = patch.field_at_ideal(nu);
        const MinkowskiVector n = -nu;
        planes.push_back({n, minkowski_inner(n, x), nu});
    }
    return planes;
}

// ---------------------------------------------------------------------------
// Cyclic and torus spacetimes

double CyclicSingularitySegment::length() const {
    const MinkowskiVector d = q - r;
    return std::sqrt(std::max(0.0, minkowski_inner(d, d)));
}

Representation torus_rep(double lambda, double mu) {
    const double a = std::exp(lambda / 2.0), b = std::exp(mu / 2.0);
    return Representation::create(1, {Mat2{a, 0.0, 0.0, 1.0 / a}, Mat2{b, 0.0, 0.0, 1.0 / b}}, 1e-12);
}

CyclicSingularitySegment cyclic_initial_singularity(double lambda, double weight) {
    if (!(lambda > 0.0)) throw InvalidInput("cyclic_initial_singularity needs lambda > 0");
    if (!(weight >= 0.0) || !std::isfinite(weight)) throw InvalidInput("weight must be >= 0");
    CyclicSingularitySegment seg;
    if (weight == 0.0) return seg;
    const Representation rep = torus_rep(lambda, 0.0);
    WeightedMulticurve mc;
    mc.curves.push_back({{1}, weight});
    const LeafSet leaves = LeafSet::build(rep, mc, 2.0);
    // The axis of the boost is the plane y = 0; its two sides are Re z > 0 (y < 0) and Re z < 0.
    const HyperbolicPoint below = HyperbolicPoint::from_upper_half_plane({1.0, 1.0});
    const HyperbolicPoint above = HyperbolicPoint::from_upper_half_plane({-1.0, 1.0});
    seg.r = MinkowskiVector{};
    seg.q = leaves.transverse(below, above);
    return seg;
}

TranslationCocycle torus_cocycle(double weight, int c1, int c2) {
    const MinkowskiVector fixed{0.0, 1.0, 0.0};  // fixed by every T(lambda)
    // Algebraic intersection numbers i(C, A) = c2, i(C, B) = -c1.
    return TranslationCocycle({fixed * (weight * c2), fixed * (-weight * c1)});
}

StandardTorusSpacetime standard_torus(double lambda, double e, double mu, double f, double eps) {
    if (std::fabs(lambda * f - mu * e) <= eps) throw InvalidInput("standard_torus: (lambda, e) and (mu, f) are dependent");
    StandardTorusSpacetime st;
    st.lambda = lambda;
    st.e = e;
    st.mu = mu;
    st.f = f;
    st.a = {boost_y_fixed(lambda), {0.0, e, 0.0}};
    st.b = {boost_y_fixed(mu), {0.0, f, 0.0}};
    return st;
}

}  // namespace ccs
