#include "ccs/earthquake.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccs {

FiniteLaminationH2::FiniteLaminationH2(std::vector<WeightedLeaf> leaves, const HyperbolicPoint& base, double eps)
    : leaves_(std::move(leaves)), base_(base), eps_(eps) {
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        if (!(leaves_[i].weight > 0.0) || !std::isfinite(leaves_[i].weight))
            throw InvalidInput("lamination weights must be positive");
        if (leaves_[i].geodesic.distance_to(base_) < eps_) throw LeafAmbiguity("lamination base lies on a leaf");
        for (std::size_t j = 0; j < i; ++j)
            if (leaves_[i].geodesic.links(leaves_[j].geodesic))
                throw InvalidInput("lamination leaves cross");
    }
}

FiniteLaminationH2 FiniteLaminationH2::from_leaf_set(const LeafSet& set, const HyperbolicPoint& base) {
    std::vector<WeightedLeaf> leaves;
    for (const auto& l : set.leaves()) leaves.push_back({l.geodesic, l.weight});
    return FiniteLaminationH2(std::move(leaves), base, set.eps());
}

FiniteLaminationH2 FiniteLaminationH2::transformed(const Mat2& g) const {
    std::vector<WeightedLeaf> leaves;
    for (const auto& l : leaves_) leaves.push_back({l.geodesic.transformed(g), l.weight});
    return FiniteLaminationH2(std::move(leaves), base_.transformed(g), eps_);
}

// ---------------------------------------------------------------------------
// CircleMap

bool CircleMap::cyclically_monotone(double eps) const {
    if (samples.size() < 2) return true;
    auto s = samples;
    std::sort(s.begin(), s.end());
    int descents = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double a = s[i].second, b = s[(i + 1) % s.size()].second;
        if (b < a - eps) ++descents;
    }
    return descents <= 1;
}

double CircleMap::operator()(double theta) const {
    const double th = theta - std::floor(theta);
    for (const auto& p : pieces) {
        const bool inside = p.from <= p.to ? (th >= p.from && th < p.to) : (th >= p.from || th < p.to);
        if (inside) return IdealPoint::from_angle(th).transformed(p.map).theta();
    }
    throw InvalidInput("circle map has no piece covering the angle");
}

// ---------------------------------------------------------------------------
// EarthquakeMap

EarthquakeMap::EarthquakeMap(FiniteLaminationH2 lam, QuakeSide side, double scale)
    : lam_(std::move(lam)), side_(side), scale_(scale) {
    if (!(scale >= 0.0) || !std::isfinite(scale)) throw InvalidInput("earthquake scale must be >= 0");
}

EarthquakeMap earthquake_along(const FiniteLaminationH2& lam, QuakeSide side, double scale) {
    return EarthquakeMap(lam, side, scale);
}

Mat2 EarthquakeMap::shear(std::size_t leaf, const HyperbolicPoint& crossing, const MinkowskiVector& travel) const {
    const WeightedLeaf& l = lam_.leaves()[leaf];
    const MinkowskiVector& c = crossing.vec();
    const MinkowskiVector n1 = l.geodesic.first().null_vector();
    const MinkowskiVector tau = n1 + c * minkowski_inner(n1, c);
    bool toward_first = det3(c, travel, tau) > 0.0;
    if (side_ == QuakeSide::Right) toward_first = !toward_first;
    const IdealPoint& to = toward_first ? l.geodesic.first() : l.geodesic.second();
    const IdealPoint& from = toward_first ? l.geodesic.second() : l.geodesic.first();
    return translation_along(to, from, scale_ * l.weight);
}

std::vector<EarthquakeMap::Step> EarthquakeMap::path_to(const MinkowskiVector& target, bool ideal,
                                                        std::optional<std::size_t>* on_leaf) const {
    const MinkowskiVector& b = lam_.base().vec();
    std::vector<Step> steps;
    MinkowskiVector tau0;
    double dist = 0.0;
    if (ideal) {
        tau0 = target + b * minkowski_inner(target, b);
        tau0 = tau0 * (1.0 / std::sqrt(minkowski_inner(tau0, tau0)));
    } else {
        dist = std::acosh(std::max(1.0, -minkowski_inner(b, target)));
    }
    const double tscale = euclidean_norm(target);
    for (std::size_t i = 0; i < lam_.leaves().size(); ++i) {
        const MinkowskiVector& n = lam_.leaves()[i].geodesic.normal();
        const double a = minkowski_inner(n, b), v = minkowski_inner(n, target);
        if (std::fabs(v) < lam_.eps() * std::max(1.0, tscale)) {
            if (on_leaf) *on_leaf = i;
            continue;
        }
        if ((a < 0.0) == (v < 0.0)) continue;
        if (ideal) {
            const double u = std::atanh(-a / minkowski_inner(n, tau0));
            const MinkowskiVector c = b * std::cosh(u) + tau0 * std::sinh(u);
            const MinkowskiVector d = b * std::sinh(u) + tau0 * std::cosh(u);
            steps.push_back({i, HyperbolicPoint::project(c, 0.0), d, u});
        } else {
            double s;
            if (dist < 1e-8)
                s = a / (a - v);
            else
                s = std::clamp(std::atanh(a * std::sinh(dist) / (a * std::cosh(dist) - v)) / dist, 0.0, 1.0);
            const HyperbolicPoint c = h2_lerp(lam_.base(), HyperbolicPoint::project(target, 0.0), s);
            const MinkowskiVector d = target + c.vec() * minkowski_inner(target, c.vec());
            steps.push_back({i, c, d, s});
        }
    }
    std::sort(steps.begin(), steps.end(), [](const Step& x, const Step& y) { return x.order < y.order; });
    return steps;
}

Mat2 EarthquakeMap::compose(const std::vector<Step>& steps) const {
    Mat2 m;
    for (const auto& s : steps) m = m * shear(s.leaf, s.crossing, s.travel);
    return m.canonical();
}

Mat2 EarthquakeMap::region_isometry(const HyperbolicPoint& p) const {
    std::optional<std::size_t> hit;
    const auto steps = path_to(p.vec(), false, &hit);
    if (hit) {
        std::ostringstream os;
        os << "point lies on leaf " << *hit << "; the earthquake is two-valued there";
        throw LeafAmbiguity(os.str());
    }
    return compose(steps);
}

Mat2 EarthquakeMap::region_isometry(const IdealPoint& xi) const {
    // A leaf ending at xi is skipped: its shear fixes xi.
    std::optional<std::size_t> hit;
    return compose(path_to(xi.null_vector(), true, &hit));
}

HyperbolicPoint EarthquakeMap::apply(const HyperbolicPoint& p) const { return p.transformed(region_isometry(p)); }

std::pair<HyperbolicPoint, HyperbolicPoint> EarthquakeMap::apply_one_sided(const HyperbolicPoint& p) const {
    std::optional<std::size_t> hit;
    const auto steps = path_to(p.vec(), false, &hit);
    const Mat2 near = compose(steps);
    if (!hit) return {p.transformed(near), p.transformed(near)};
    const MinkowskiVector& b = lam_.base().vec();
    const MinkowskiVector away = -(b + p.vec() * minkowski_inner(b, p.vec()));
    const Mat2 far = (near * shear(*hit, p, away)).canonical();
    return {p.transformed(near), p.transformed(far)};
}

IdealPoint EarthquakeMap::apply(const IdealPoint& xi) const { return xi.transformed(region_isometry(xi)); }

CircleMap boundary_value(const EarthquakeMap& e, int n) {
    if (n < 1) throw InvalidInput("boundary_value needs n >= 1");
    CircleMap out;
    for (int k = 0; k < n; ++k) {
        const double th = static_cast<double>(k) / n;
        out.samples.emplace_back(th, e.apply(IdealPoint::from_angle(th)).theta());
    }
    std::vector<double> cuts;
    for (const auto& l : e.lamination().leaves()) {
        cuts.push_back(l.geodesic.first().theta());
        cuts.push_back(l.geodesic.second().theta());
    }
    std::sort(cuts.begin(), cuts.end());
    if (cuts.empty()) {
        out.pieces.push_back({0.0, 1.0, Mat2::identity()});
        return out;
    }
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const double from = cuts[i], to = cuts[(i + 1) % cuts.size()];
        double mid = i + 1 < cuts.size() ? (from + to) / 2.0 : (from + to + 1.0) / 2.0;
        mid -= std::floor(mid);
        if (i + 1 < cuts.size() && to - from < 1e-15) continue;
        out.pieces.push_back({from, to, e.region_isometry(IdealPoint::from_angle(mid))});
    }
    return out;
}

QuadricActionExample quadric_action_example(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw InvalidInput("quadric_action_example needs s > 0");
    QuadricActionExample ex;
    ex.start = {1.0, 1.0, 1.0, 1.0};
    const Mat2 d{s, 0.0, 0.0, 1.0};
    ex.after_right = ex.start * d;
    ex.after_left = d * ex.after_right;
    const double r = std::sqrt(s);
    ex.half_measure = Mat2{r, 0.0, 0.0, 1.0} * ex.after_right * Mat2{1.0 / r, 0.0, 0.0, 1.0};
    return ex;
}

Representation rep_after_earthquake(const Representation& rep, const WeightedMulticurve& mc, double scale,
                                    QuakeSide side, const LeafOptions& opt) {
    if (!(scale >= 0.0) || !std::isfinite(scale)) throw InvalidInput("earthquake scale must be >= 0");
    mc.validate();
    if (scale == 0.0 || mc.curves.empty()) return rep;
    const HyperbolicPoint probe = HyperbolicPoint::polar(0.5, 0.0);
    double window = 0.5;
    for (const auto& g : rep.generators())
        window = std::max(window, h2_distance(HyperbolicPoint::apex(), probe.transformed(g), 1e-6));
    const LeafSet leaves = LeafSet::build(rep, mc, window + 1.0, opt);
    const HyperbolicPoint b = default_basepoint(leaves);
    const EarthquakeMap quake(FiniteLaminationH2::from_leaf_set(leaves, b), side, scale);
    std::vector<Mat2> gens;
    for (const auto& g : rep.generators()) gens.push_back((quake.region_isometry(b.transformed(g)) * g).canonical());
    return Representation::create(rep.genus(), std::move(gens), 1e-8);
}

FiniteLaminationH2 single_leaf_lamination(double weight) {
    const GeodesicH2 leaf(IdealPoint::from_real(0.0), IdealPoint::from_vector(1.0, 0.0));
    return FiniteLaminationH2({{leaf, weight}}, HyperbolicPoint::from_upper_half_plane({-1.0, 1.0}));
}

}  // namespace ccs
