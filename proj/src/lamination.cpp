#include "ccs/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "ccs/kernels.hpp"

namespace ccs {

// ---------------------------------------------------------------------------
// GeodesicH2

GeodesicH2::GeodesicH2(const IdealPoint& e1, const IdealPoint& e2, double eps)
    : e1_(e1), e2_(e2), n_(geodesic_normal(e1, e2, eps)) {}

GeodesicH2 GeodesicH2::transformed(const Mat2& m) const { return {e1_.transformed(m), e2_.transformed(m)}; }

bool GeodesicH2::links(const GeodesicH2& o) const {
    const double eps = 1e-12;
    const double lo = std::min(e1_.theta(), e2_.theta()), hi = std::max(e1_.theta(), e2_.theta());
    for (const IdealPoint* p : {&o.e1_, &o.e2_})
        if (p->circle_distance(e1_) < eps || p->circle_distance(e2_) < eps) return false;
    auto inside = [&](double t) { return t > lo && t < hi; };
    return inside(o.e1_.theta()) != inside(o.e2_.theta());
}

bool GeodesicH2::same_as(const GeodesicH2& o, double eps) const {
    return (e1_.circle_distance(o.e1_) < eps && e2_.circle_distance(o.e2_) < eps) ||
           (e1_.circle_distance(o.e2_) < eps && e2_.circle_distance(o.e1_) < eps);
}

double GeodesicH2::distance_to(const HyperbolicPoint& p) const {
    return std::asinh(std::fabs(minkowski_inner(n_, p.vec())));
}

// ---------------------------------------------------------------------------
// Multicurves

void WeightedMulticurve::validate() const {
    for (const auto& c : curves) {
        if (c.word.empty()) throw InvalidInput("multicurve contains an empty word");
        if (!(c.weight > 0.0) || !std::isfinite(c.weight)) throw InvalidInput("multicurve weights must be positive");
    }
}

WeightedMulticurve WeightedMulticurve::scaled(double factor) const {
    WeightedMulticurve out = *this;
    for (auto& c : out.curves) c.weight *= factor;
    return out;
}

WeightedMulticurve join(const WeightedMulticurve& a, const WeightedMulticurve& b) {
    WeightedMulticurve out = a;
    for (const auto& c : b.curves) {
        auto it = std::find_if(out.curves.begin(), out.curves.end(), [&](const auto& x) { return x.word == c.word; });
        if (it != out.curves.end())
            it->weight += c.weight;
        else
            out.curves.push_back(c);
    }
    return out;
}

GeodesicH2 closed_geodesic_of(const Representation& rep, const Word& w) {
    const Axis ax = axis(evaluate(rep, w));
    return {ax.attracting, ax.repelling};
}

bool disjointness_check(const Representation& rep, const WeightedMulticurve& mc, int radius) {
    if (radius < 1) throw InvalidInput("disjointness_check needs radius >= 1");
    mc.validate();
    if (mc.curves.empty()) return true;
    std::vector<GeodesicH2> axes;
    for (const auto& c : mc.curves) axes.push_back(closed_geodesic_of(rep, c.word));
    const GroupBall ball = enumerate_ball(rep, radius);
    // By equivariance it suffices to test each base axis against every lift.
    for (const auto& base : axes)
        for (const auto& other : axes)
            for (const auto& el : ball.elements) {
                const GeodesicH2 lift = other.transformed(el.matrix);
                if (lift.same_as(base, 1e-9)) continue;
                if (base.links(lift)) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// LeafSet

namespace {

struct EndpointKey {
    long long lo, hi;
    bool operator<(const EndpointKey& o) const { return lo != o.lo ? lo < o.lo : hi < o.hi; }
};

double apex_distance(const Mat2& m) {
    // cosh d(o, m o) = (a^2 + b^2 + c^2 + d^2) / 2
    return std::acosh(std::max(1.0, (m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d) / 2.0));
}

}  // namespace

LeafSet LeafSet::build(const Representation& rep, const WeightedMulticurve& mc, double window_radius,
                       const LeafOptions& opt) {
    if (!(window_radius > 0.0)) throw InvalidInput("leaf window radius must be positive");
    if (opt.cap < 0 || opt.start_radius < 0) throw InvalidInput("ball radius must be >= 0");
    if (opt.start_radius > opt.cap) throw EnumerationCapExceeded("start radius exceeds the enumeration cap");
    mc.validate();
    LeafSet out;
    out.window_ = window_radius;
    out.eps_ = opt.eps;
    if (mc.curves.empty()) return out;

    std::vector<GeodesicH2> axes;
    double reach = 0.0;
    const HyperbolicPoint apex = HyperbolicPoint::apex();
    for (const auto& c : mc.curves) {
        const Mat2 m = evaluate(rep, c.word);
        const Axis ax = axis(m);
        axes.emplace_back(ax.attracting, ax.repelling);
        // A lift g.axis meeting the window can be written with g o within
        // window + d(o, axis) + length/2 of o.
        reach = std::max(reach, window_radius + axes.back().distance_to(apex) + ax.translation_length / 2.0);
    }
    double step = 0.0;
    for (const auto& g : rep.generators()) step = std::max(step, apex_distance(g));
    const double prune = reach + step;

    BallBuilder builder(rep, opt.eps, [prune](const Mat2& m) { return apex_distance(m) <= prune; });
    const double key_scale = 1e8;
    std::map<EndpointKey, std::size_t> seen;
    auto add_lifts = [&](std::size_t begin, std::size_t end) {
        std::size_t added = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const BallElement& el = builder.ball().elements[i];
            for (std::size_t c = 0; c < axes.size(); ++c) {
                GeodesicH2 lift = axes[c].transformed(el.matrix);
                if (lift.distance_to(apex) >= window_radius) continue;
                double lo = lift.first().theta(), hi = lift.second().theta();
                if (lo > hi) std::swap(lo, hi);
                const long long klo = std::llround(lo * key_scale), khi = std::llround(hi * key_scale);
                bool dup = false;
                for (long long dl = -1; dl <= 1 && !dup; ++dl)
                    for (long long dh = -1; dh <= 1 && !dup; ++dh) {
                        auto it = seen.find({klo + dl, khi + dh});
                        if (it != seen.end() && out.leaves_[it->second].geodesic.same_as(lift, 1e-9)) dup = true;
                    }
                if (dup) continue;
                seen[{klo, khi}] = out.leaves_.size();
                out.leaves_.push_back({std::move(lift), mc.curves[c].weight, c, el.word});
                ++added;
            }
        }
        return added;
    };

    add_lifts(0, builder.layer_end());
    int quiet = 0;
    int radius = 0;
    while (true) {
        if (radius >= opt.start_radius && quiet >= 2) break;
        if (radius >= opt.cap) {
            std::ostringstream os;
            os << "leaf enumeration did not stabilize within word length " << opt.cap;
            throw EnumerationCapExceeded(os.str());
        }
        const std::size_t fresh = builder.grow();
        ++radius;
        if (fresh == 0) break;  // the pruned region is exhausted
        quiet = add_lifts(builder.layer_begin(), builder.layer_end()) == 0 ? quiet + 1 : 0;
    }
    out.radius_used_ = radius;
    for (const auto& l : out.leaves_) {
        out.nx_.push_back(l.geodesic.normal().x);
        out.ny_.push_back(l.geodesic.normal().y);
        out.nt_.push_back(l.geodesic.normal().t);
    }
    return out;
}

std::optional<std::size_t> LeafSet::leaf_at(const HyperbolicPoint& p) const {
    if (leaves_.empty()) return std::nullopt;
    std::vector<double> d(leaves_.size());
    kernels::minkowski_dot({nx_, ny_, nt_}, p.vec().x, p.vec().y, p.vec().t, d);
    std::size_t best = 0;
    for (std::size_t i = 1; i < d.size(); ++i)
        if (std::fabs(d[i]) < std::fabs(d[best])) best = i;
    if (std::fabs(d[best]) < eps_) return best;
    return std::nullopt;
}

void LeafSet::check_point(const HyperbolicPoint& p) const {
    const double r = h2_distance(HyperbolicPoint::apex(), p, 1e-6);
    if (r > window_ + 1e-12) {
        std::ostringstream os;
        os << "point at distance " << r << " lies outside the leaf window " << window_;
        throw InvalidInput(os.str());
    }
    if (auto hit = leaf_at(p)) {
        std::ostringstream os;
        os << "point lies on a leaf of curve " << leaves_[*hit].curve;
        throw LeafAmbiguity(os.str());
    }
}

namespace {

// Parameter s in (0, 1) where the geodesic segment pq meets the plane with
// signed values a = <n, p>, b = <n, q> of opposite sign.
double crossing_parameter(double a, double b, double dist) {
    if (dist < 1e-8) return a / (a - b);
    const double u = std::atanh(a * std::sinh(dist) / (a * std::cosh(dist) - b));
    return std::clamp(u / dist, 0.0, 1.0);
}

}  // namespace

std::vector<CrossingRecord> LeafSet::crossings(const HyperbolicPoint& p, const HyperbolicPoint& q) const {
    check_point(p);
    check_point(q);
    std::vector<CrossingRecord> out;
    if (leaves_.empty()) return out;
    std::vector<double> dp(leaves_.size()), dq(leaves_.size());
    kernels::minkowski_dot({nx_, ny_, nt_}, p.vec().x, p.vec().y, p.vec().t, dp);
    kernels::minkowski_dot({nx_, ny_, nt_}, q.vec().x, q.vec().y, q.vec().t, dq);
    const double dist = std::acosh(std::max(1.0, -minkowski_inner(p.vec(), q.vec())));
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        if ((dp[i] < 0.0) == (dq[i] < 0.0)) continue;
        const MinkowskiVector& n = leaves_[i].geodesic.normal();
        out.push_back({leaves_[i].geodesic, crossing_parameter(dp[i], dq[i], dist), dp[i] < 0.0 ? n : -n,
                       leaves_[i].weight, leaves_[i].curve});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.s < y.s; });
    return out;
}

MinkowskiVector LeafSet::transverse(const HyperbolicPoint& p, const HyperbolicPoint& q) const {
    return transverse_from(p, {q}).front();
}

std::vector<MinkowskiVector> LeafSet::transverse_from(const HyperbolicPoint& p,
                                                      const std::vector<HyperbolicPoint>& qs) const {
    check_point(p);
    std::vector<MinkowskiVector> out(qs.size());
    if (leaves_.empty()) {
        for (const auto& q : qs) check_point(q);
        return out;
    }
    std::vector<double> dp(leaves_.size()), dq(leaves_.size());
    kernels::minkowski_dot({nx_, ny_, nt_}, p.vec().x, p.vec().y, p.vec().t, dp);
    for (std::size_t k = 0; k < qs.size(); ++k) {
        check_point(qs[k]);
        const MinkowskiVector& v = qs[k].vec();
        kernels::minkowski_dot({nx_, ny_, nt_}, v.x, v.y, v.t, dq);
        MinkowskiVector sum;
        for (std::size_t i = 0; i < leaves_.size(); ++i) {
            if ((dp[i] < 0.0) == (dq[i] < 0.0)) continue;
            const double w = dp[i] < 0.0 ? leaves_[i].weight : -leaves_[i].weight;
            sum += leaves_[i].geodesic.normal() * w;
        }
        out[k] = sum;
    }
    return out;
}

MinkowskiVector LeafSet::transverse_to(const HyperbolicPoint& p, const MinkowskiVector& v) const {
    check_point(p);
    MinkowskiVector sum;
    if (leaves_.empty()) return sum;
    std::vector<double> dp(leaves_.size()), dv(leaves_.size());
    kernels::minkowski_dot({nx_, ny_, nt_}, p.vec().x, p.vec().y, p.vec().t, dp);
    kernels::minkowski_dot({nx_, ny_, nt_}, v.x, v.y, v.t, dv);
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        if ((dp[i] < 0.0) == (dv[i] < 0.0)) continue;
        const double w = dp[i] < 0.0 ? leaves_[i].weight : -leaves_[i].weight;
        sum += leaves_[i].geodesic.normal() * w;
    }
    return sum;
}

HyperbolicPoint default_basepoint(const LeafSet& leaves) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < 1000; ++k) {
        const HyperbolicPoint p = k == 0 ? HyperbolicPoint::apex() : HyperbolicPoint::polar(0.01 * k, golden * k);
        bool clear = true;
        for (const auto& l : leaves.leaves())
            if (std::fabs(minkowski_inner(l.geodesic.normal(), p.vec())) < 1e-6) {
                clear = false;
                break;
            }
        if (clear) return p;
    }
    throw DegenerateGeometry("could not place a basepoint off the lamination");
}

double window_for(std::initializer_list<HyperbolicPoint> pts, double margin) {
    double r = 0.0;
    for (const auto& p : pts) r = std::max(r, h2_distance(HyperbolicPoint::apex(), p, 1e-6));
    return r + margin;
}

std::vector<CrossingRecord> crossings(const Representation& rep, const WeightedMulticurve& mc,
                                      const HyperbolicPoint& p, const HyperbolicPoint& q, const LeafOptions& opt) {
    return LeafSet::build(rep, mc, window_for({p, q}), opt).crossings(p, q);
}

MinkowskiVector transverse_vector(const Representation& rep, const WeightedMulticurve& mc,
                                  const HyperbolicPoint& p, const HyperbolicPoint& q, const LeafOptions& opt) {
    return LeafSet::build(rep, mc, window_for({p, q}), opt).transverse(p, q);
}

}  // namespace ccs
