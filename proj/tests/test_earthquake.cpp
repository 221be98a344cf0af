#include "doctest.h"

#include <cmath>
#include <random>

#include "ccs/earthquake.hpp"

using namespace ccs;

namespace {

bool mat_close(const Mat2& m, double a, double b, double c, double d, double tol) {
    return std::abs(m.a - a) <= tol && std::abs(m.b - b) <= tol && std::abs(m.c - c) <= tol && std::abs(m.d - d) <= tol;
}

double circle_gap(double x, double y) {
    double d = std::fmod(std::abs(x - y), 1.0);
    return std::min(d, 1.0 - d);
}

// Three disjoint leaves: (0, inf), (1, 2), (-3, -1), based at -0.5 + 0.2i... in the region between.
FiniteLaminationH2 three_leaves() {
    std::vector<WeightedLeaf> leaves = {
        {GeodesicH2(IdealPoint::from_real(0.0), IdealPoint::from_vector(1.0, 0.0)), 0.7},
        {GeodesicH2(IdealPoint::from_real(1.0), IdealPoint::from_real(2.0)), 0.4},
        {GeodesicH2(IdealPoint::from_real(-3.0), IdealPoint::from_real(-1.0)), 1.1},
    };
    return FiniteLaminationH2(leaves, HyperbolicPoint::from_upper_half_plane({-0.4, 3.0}));
}

}  // namespace

TEST_CASE("lamination validation") {
    const GeodesicH2 g(IdealPoint::from_real(0.0), IdealPoint::from_vector(1.0, 0.0));
    const GeodesicH2 h(IdealPoint::from_real(-1.0), IdealPoint::from_real(1.0));
    const HyperbolicPoint base = HyperbolicPoint::from_upper_half_plane({-1.0, 3.0});
    CHECK_THROWS_AS(FiniteLaminationH2({{g, 1.0}, {h, 1.0}}, base), InvalidInput);
    CHECK_THROWS_AS(FiniteLaminationH2({{g, -1.0}}, base), InvalidInput);
    CHECK_THROWS_AS(FiniteLaminationH2({{g, 1.0}}, HyperbolicPoint::from_upper_half_plane({0.0, 1.0})), LeafAmbiguity);
}

TEST_CASE("single leaf earthquake") {
    for (double s : {2.0, 4.0, 9.0}) {
        CAPTURE(s);
        const EarthquakeMap e = earthquake_along(single_leaf_lamination(std::log(s)), QuakeSide::Left, 1.0);
        // base side fixed, the other side multiplied by s
        const std::complex<double> neg{-0.7, 0.4}, pos{0.6, 1.3};
        CHECK(std::abs(e.apply(HyperbolicPoint::from_upper_half_plane(neg)).to_upper_half_plane() - neg) < 1e-12);
        CHECK(std::abs(e.apply(HyperbolicPoint::from_upper_half_plane(pos)).to_upper_half_plane() - s * pos) < 1e-9 * s);

        const CircleMap m = boundary_value(e, 64);
        CHECK(m.cyclically_monotone());
        for (const auto& [in, out] : m.samples) {
            const IdealPoint xi = IdealPoint::from_angle(in);
            double expect;
            if (xi.q() == 0.0 || in == 0.0) expect = 0.0;  // infinity
            else {
                const double z = xi.p() / xi.q();
                expect = IdealPoint::from_real(z > 0.0 ? s * z : z).theta();
            }
            CHECK(circle_gap(out, expect) < 1e-12);
        }

        // on the leaf both one-sided values are reported
        const HyperbolicPoint on = HyperbolicPoint::from_upper_half_plane({0.0, 2.0});
        CHECK_THROWS_AS(e.apply(on), LeafAmbiguity);
        const auto [l, r] = e.apply_one_sided(on);
        CHECK(h2_distance(l, r) == doctest::Approx(std::log(s)).epsilon(1e-9));
    }
}

TEST_CASE("identity and scale") {
    const FiniteLaminationH2 empty({}, HyperbolicPoint::apex());
    const EarthquakeMap id = earthquake_along(empty, QuakeSide::Left, 1.0);
    const HyperbolicPoint p = HyperbolicPoint::polar(1.0, 2.0);
    CHECK(h2_distance(id.apply(p), p) < 1e-12);
    for (const auto& [in, out] : boundary_value(id, 16).samples) CHECK(circle_gap(in, out) < 1e-15);

    const FiniteLaminationH2 lam = three_leaves();
    const EarthquakeMap zero = earthquake_along(lam, QuakeSide::Left, 0.0);
    CHECK(h2_distance(zero.apply(p), p) < 1e-12);
    CHECK_THROWS_AS(earthquake_along(lam, QuakeSide::Left, -1.0), InvalidInput);

    // scale additivity along a single leaf
    const FiniteLaminationH2 one = single_leaf_lamination(1.0);
    const HyperbolicPoint q = HyperbolicPoint::from_upper_half_plane({0.5, 0.5});
    const HyperbolicPoint twice =
        earthquake_along(one, QuakeSide::Left, 0.8).apply(earthquake_along(one, QuakeSide::Left, 0.3).apply(q));
    CHECK(h2_distance(twice, earthquake_along(one, QuakeSide::Left, 1.1).apply(q)) < 1e-12);
}

TEST_CASE("three leaves") {
    const FiniteLaminationH2 lam = three_leaves();
    const EarthquakeMap left = earthquake_along(lam, QuakeSide::Left, 1.0);
    const EarthquakeMap right = earthquake_along(lam, QuakeSide::Right, 1.0);

    CHECK(sup_norm(left.apply(lam.base()).vec() - lam.base().vec()) < 1e-12);
    CHECK(left.region_isometry(lam.base()).psl_distance(Mat2::identity()) < 1e-12);

    const CircleMap ml = boundary_value(left, 200);
    const CircleMap mr = boundary_value(right, 200);
    CHECK(ml.cyclically_monotone());
    CHECK(mr.cyclically_monotone());
    CHECK(!ml.pieces.empty());

    // pieces reproduce the samples
    for (const auto& [in, out] : ml.samples) CHECK(circle_gap(ml(in), out) < 1e-9);

    // the base arc (between -1 and 0) is fixed by both, so the composite fixes it
    for (const auto& [in, out] : ml.samples) {
        const IdealPoint xi = IdealPoint::from_angle(in);
        if (xi.q() == 0.0) continue;
        const double z = xi.p() / xi.q();
        if (z > -1.0 + 1e-6 && z < -1e-6) CHECK(circle_gap(mr(out), in) < 1e-9);
    }

    SUBCASE("conjugation equivariance") {
        const Mat2 g = Mat2::unimodular(2.0, 1.0, 3.0, 2.0);
        const CircleMap mg = boundary_value(earthquake_along(lam.transformed(g), QuakeSide::Left, 1.0), 64);
        for (const auto& [in, out] : mg.samples) {
            const double pre = IdealPoint::from_angle(in).transformed(g.inverse()).theta();
            const double expect = IdealPoint::from_angle(ml(pre)).transformed(g).theta();
            CHECK(circle_gap(out, expect) < 1e-9);
        }
    }

    SUBCASE("ideal points near leaves are resolved by region") {
        const IdealPoint xi = IdealPoint::from_real(1.5);  // beyond the leaf (1, 2)
        const Mat2 m = left.region_isometry(xi);
        CHECK(left.apply(xi).circle_distance(xi.transformed(m)) < 1e-12);
    }
}

TEST_CASE("worked quadric example") {
    for (double s : {2.0, 4.0, 9.0}) {
        const QuadricActionExample ex = quadric_action_example(s);
        CHECK(mat_close(ex.start, 1, 1, 1, 1, 0.0));
        CHECK(mat_close(ex.after_right, s, 1, s, 1, 1e-12));
        CHECK(mat_close(ex.after_left, s * s, s, s, 1, 1e-12));
        CHECK(mat_close(ex.half_measure, s, std::sqrt(s), std::sqrt(s), 1, 1e-12));
        // the half-measure image lies on the plane b = c (up to one rounding)
        CHECK(std::abs(ex.half_measure.b - ex.half_measure.c) <= 4e-16 * ex.half_measure.b);
    }
    const QuadricActionExample one = quadric_action_example(1.0);
    CHECK(mat_close(one.after_left, 1, 1, 1, 1, 0.0));
    CHECK(mat_close(one.half_measure, 1, 1, 1, 1, 0.0));
    const QuadricActionExample four = quadric_action_example(4.0);
    CHECK(mat_close(four.after_left, 16, 4, 4, 1, 0.0));
    CHECK(mat_close(four.half_measure, 4, 2, 2, 1, 0.0));
    CHECK_THROWS_AS(quadric_action_example(0.0), InvalidInput);
    CHECK_THROWS_AS(quadric_action_example(-2.0), InvalidInput);
}

TEST_CASE("twisted representations") {
    const Representation rep = regular_polygon_rep(2);
    WeightedMulticurve mc;
    mc.curves.push_back({parse_word("a1", 2), 1.0});

    const Representation same = rep_after_earthquake(rep, mc, 0.0);
    for (int i = 1; i <= 4; ++i) CHECK(same.generator(i).psl_distance(rep.generator(i)) < 1e-12);

    const Representation tw = rep_after_earthquake(rep, mc, 0.7);
    CHECK(tw.relator_residual() < 1e-8);
    for (const char* w : {"a1", "a2", "b2", "a2 b2", "a1 a2"})
        CHECK(std::abs(std::abs(evaluate(tw, parse_word(w, 2)).trace()) -
                       std::abs(evaluate(rep, parse_word(w, 2)).trace())) < 1e-8);
    CHECK(std::abs(std::abs(evaluate(tw, {2}).trace()) - std::abs(evaluate(rep, {2}).trace())) > 1e-3);
    CHECK(euler_class(tw) == euler_class(rep));

    SUBCASE("cyclic group twisted along its own axis") {
        const double a = std::exp(0.6);
        const Representation cyc = Representation::create(1, {Mat2{a, 0.0, 0.0, 1.0 / a}, Mat2::identity()});
        WeightedMulticurve axis_curve;
        axis_curve.curves.push_back({{1}, 0.9});
        const Representation t = rep_after_earthquake(cyc, axis_curve, 1.0);
        CHECK(t.generator(1).psl_distance(cyc.generator(1)) < 1e-12);
    }

    SUBCASE("equivariance of the lifted earthquake") {
        const LeafSet set = LeafSet::build(rep, mc, 5.0);
        const HyperbolicPoint base = default_basepoint(set);
        const EarthquakeMap e = earthquake_along(FiniteLaminationH2::from_leaf_set(set, base), QuakeSide::Left, 0.7);
        std::mt19937_64 rng(12);
        std::uniform_real_distribution<double> r(0.0, 0.8), th(0.0, 2.0 * M_PI);
        int tested = 0;
        for (int i = 0; i < 20; ++i) {
            const HyperbolicPoint p = HyperbolicPoint::polar(r(rng), th(rng));
            for (int gen = 1; gen <= 4; ++gen) {
                const HyperbolicPoint gp = p.transformed(rep.generator(gen));
                if (set.leaf_at(p) || set.leaf_at(gp)) continue;
                const HyperbolicPoint lhs = e.apply(gp);
                const HyperbolicPoint rhs = e.apply(p).transformed(tw.generator(gen));
                CHECK(sup_norm(lhs.vec() - rhs.vec()) < 1e-9 * lhs.vec().t);
                ++tested;
            }
        }
        CHECK(tested > 40);
    }
}
