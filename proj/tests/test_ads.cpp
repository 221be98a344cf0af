#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "ccs/ads.hpp"

using namespace ccs;

namespace {

bool proportional(const R22Vector& u, const R22Vector& v, double tol = 1e-12) {
    // all 2x2 minors of the pair vanish
    const double x[4] = {u.a, u.b, u.c, u.d}, y[4] = {v.a, v.b, v.c, v.d};
    const double s = std::max(u.max_abs(), 1e-300) * std::max(v.max_abs(), 1e-300);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(x[i] * y[j] - x[j] * y[i]) > tol * s) return false;
    return true;
}

bool proportional(const ProjectivePlane& p, const ProjectivePlane& q, double tol = 1e-12) {
    return proportional(R22Vector{p.e, p.f, p.g, p.h}, R22Vector{q.e, q.f, q.g, q.h}, tol);
}

CircleGraph random_monotone_graph(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> l(n), r(n);
    for (auto& x : l) x = u(rng);
    for (auto& x : r) x = u(rng);
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    const double shift = u(rng);
    std::vector<std::pair<double, double>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(l[i], std::fmod(r[i] + shift, 1.0));
    return CircleGraph::from_pairs(pairs);
}

Mat2 random_sl2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (;;) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (a * d - b * c > 0.2) return Mat2::normalized(a, b, c, d);
    }
}

}  // namespace

TEST_CASE("quadratic form") {
    const R22Vector u{1, 2, 3, 4}, v{-1, 0.5, 2, 1};
    CHECK(q_form(u) == 1 * 4 - 2 * 3);
    CHECK(q_form(u + v) == doctest::Approx(q_form(u) + 2 * q_pair(u, v) + q_form(v)));
    CHECK(q_pair(u, u) == q_form(u));
}

TEST_CASE("Segre embedding and rulings") {
    const double s = 3.0;
    CHECK(proportional(segre({1, 1}, {1, 1}), {1, 1, 1, 1}));
    CHECK(proportional(segre({1, 0}, {1, 0}), {1, 0, 0, 0}));
    CHECK(proportional(segre({1, 1}, {s, 1}), {s, 1, s, 1}));
    CHECK_THROWS_AS(segre({0, 0}, {1, 0}), InvalidInput);

    auto [l, r] = rulings_of({1, 1, 1, 1});
    CHECK(same_projective(l, {1, 1}));
    CHECK(same_projective(r, {1, 1}));
    std::tie(l, r) = rulings_of({s, 1, s, 1});
    CHECK(same_projective(l, {1, 1}));
    CHECK(same_projective(r, {s, 1}));
    CHECK_THROWS_AS(rulings_of({1, 0, 0, 1}), InvalidInput);
    CHECK_THROWS_AS(rulings_of({0, 0, 0, 0}), InvalidInput);

    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    for (int i = 0; i < 200; ++i) {
        const ProjectivePair a{g(rng), g(rng)}, b{g(rng), g(rng)};
        const R22Vector p = segre(a, b);
        CHECK(std::abs(q_form(p)) <= 1e-15 * p.max_abs() * p.max_abs());
        const auto [la, rb] = rulings_of(p);
        CHECK(same_projective(la, a, 1e-9));
        CHECK(same_projective(rb, b, 1e-9));
    }
}

TEST_CASE("plane classification") {
    CHECK(plane_classify({0, 1, -1, 0}) == PlaneClass::Spacelike);
    CHECK(plane_classify({1, 0, 0, 0}) == PlaneClass::Null);
    CHECK(plane_classify({0, 1, 1, 0}) == PlaneClass::Lorentzian);
    CHECK_THROWS_AS(plane_classify({0, 0, 0, 0}), InvalidInput);
    CHECK(std::string(to_string(PlaneClass::Lorentzian)) == "lorentzian");
    for (double c : {1e-6, 1e-3, 1.0, 1e3, 1e6}) {
        CHECK(plane_classify(ProjectivePlane{0.2, 1, -1, 0.3} * c) == PlaneClass::Spacelike);
        CHECK(plane_classify(ProjectivePlane{0.2, 1, -1, 0.3} * -c) == PlaneClass::Spacelike);
        CHECK(plane_classify(ProjectivePlane{1, 2, 3, 6} * c) == PlaneClass::Null);
    }
}

TEST_CASE("duality") {
    // the plane b = c has the rotation J as its pole
    const R22Vector j = dual_point({0, 1, -1, 0});
    CHECK(proportional(j, {0, 1, -1, 0}));
    CHECK(q_form(j) > 0);

    // null plane: the pole lies on Q, on the plane, and the plane is tangent there
    const ProjectivePlane null{1, 2, 3, 6};
    const R22Vector p = dual_point(null);
    CHECK(q_form(p) == 0.0);
    CHECK(null(p) == 0.0);
    CHECK(proportional(dual_plane(p), null));

    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    for (int i = 0; i < 50; ++i) {
        const ProjectivePlane pl{g(rng), g(rng), g(rng), g(rng)};
        CHECK(proportional(dual_plane(dual_point(pl)), pl));
        // pole is in AdS iff the plane is spacelike
        const bool spacelike = plane_classify(pl) == PlaneClass::Spacelike;
        CHECK((q_form(dual_point(pl)) > 0) == spacelike);
    }
}

TEST_CASE("planes and Moebius maps") {
    CHECK(plane_map({0, 1, -1, 0}).psl_distance(Mat2::identity()) < 1e-15);
    CHECK_THROWS_AS(plane_map({0, 1, 1, 0}), DegenerateGeometry);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i) {
        const Mat2 m = random_sl2(rng);
        const ProjectivePlane pl = plane_of_map(m);
        CHECK(plane_classify(pl) == PlaneClass::Spacelike);
        CHECK(plane_map(pl).psl_distance(m) < 1e-12);
        // the plane contains the graph of m
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double t = u(rng);
        const ProjectivePair x{std::cos(M_PI * t), std::sin(M_PI * t)};
        const ProjectivePair y{m.a * x[0] + m.b * x[1], m.c * x[0] + m.d * x[1]};
        const R22Vector pt = segre(x, y);
        CHECK(std::abs(pl(pt)) < 1e-12 * pt.max_abs() * pl.max_abs());
    }
}

TEST_CASE("height chart") {
    // graph points: z = tan(pi (lift - left))
    for (double dl : {0.0, 0.1, -0.2, 0.3}) {
        const double t = 0.17;
        const R22Vector p = segre({std::cos(M_PI * t), std::sin(M_PI * t)}, {std::cos(M_PI * (t + dl)), std::sin(M_PI * (t + dl))});
        const auto c = height_chart(p);
        CHECK(c[2] == doctest::Approx(std::tan(M_PI * dl)));
        CHECK(c[0] * c[0] + c[1] * c[1] == doctest::Approx(c[2] * c[2] + 1.0));
        CHECK(height_plane(c[2])(p) == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(plane_classify(height_plane(0.0)) == PlaneClass::Spacelike);
    CHECK(plane_classify(height_plane(5.0)) == PlaneClass::Spacelike);
}

TEST_CASE("AdS distance") {
    for (double s : {2.0, 4.0, 9.0}) {
        const Mat2 d{std::sqrt(s), 0.0, 0.0, 1.0 / std::sqrt(s)};
        CHECK(ads_distance(R22Vector::from_matrix(Mat2::identity()), R22Vector::from_matrix(d)) ==
              doctest::Approx(0.5 * std::log(s)).epsilon(1e-12));
    }
    const R22Vector rot{std::cos(0.3), std::sin(0.3), -std::sin(0.3), std::cos(0.3)};
    CHECK_THROWS_AS(ads_distance(R22Vector{1, 0, 0, 1}, rot), DegenerateGeometry);
}

TEST_CASE("circle graphs") {
    CHECK_THROWS_AS(CircleGraph::from_pairs({{0.1, 0.1}, {0.2, 0.2}}), InvalidInput);
    CHECK_THROWS_AS(CircleGraph::from_pairs({{0.1, 0.1}, {0.2, 0.5}, {0.3, 0.3}, {0.6, 0.7}}), InvalidInput);
    const CircleGraph g = CircleGraph::from_pairs({{0.9, 0.1}, {0.1, 0.3}, {0.5, 0.6}, {1.25, 0.45}});
    REQUIRE(g.size() == 4u);
    CHECK(g.samples()[0].left == doctest::Approx(0.1));
    CHECK(g.samples()[1].left == doctest::Approx(0.25));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g.samples()[i].lift > g.samples()[i - 1].lift);
    CHECK(g.samples().back().lift - g.samples().front().lift < 1.0);

    SUBCASE("graph spacelikeness") {
        std::mt19937_64 rng(3);
        for (int k = 0; k < 20; ++k) {
            const CircleGraph r = random_monotone_graph(rng, 40);
            const auto pts = r.points();
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) CHECK(q_form(pts[i + 1] - pts[i]) < 0.0);
        }
    }

    SUBCASE("transformed graph") {
        const Mat2 h = Mat2::unimodular(2.0, 1.0, 1.0, 1.0);
        const CircleGraph id = CircleGraph::of_mobius(Mat2::identity(), 12);
        const CircleGraph t = id.transformed(Mat2::identity(), h);
        for (const auto& s : t.samples()) {
            const double expect = IdealPoint::from_angle(s.left).transformed(h).theta();
            CHECK(std::abs(s.right - expect) < 1e-12);
        }
    }
}

TEST_CASE("disjoint plane configuration with three points") {
    const CircleGraph g = CircleGraph::from_pairs({{0.0, 0.0}, {1.0 / 3.0, 1.0 / 3.0}, {2.0 / 3.0, 2.0 / 3.0}});
    for (std::size_t i = 0; i < 3; ++i) {
        const auto c = height_chart(g.point(i));
        CHECK(std::abs(c[2]) < 1e-15);
        CHECK(std::hypot(c[0], c[1]) == doctest::Approx(1.0));
    }
    const std::vector<R22Vector> env = graph_envelope(g, 24);
    double zmax = -1e9, zmin = 1e9;
    for (const auto& p : env) {
        const auto c = height_chart(p);
        zmax = std::max(zmax, c[2]);
        zmin = std::min(zmin, c[2]);
    }
    CHECK(zmax == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(zmin == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-12));
    // twisted corner points: radius 2 at height +-sqrt 3
    const R22Vector corner = segre({1.0, 0.0}, {std::cos(M_PI / 3), std::sin(M_PI / 3)});
    const auto cc = height_chart(corner);
    CHECK(std::hypot(cc[0], cc[1]) == doctest::Approx(2.0));
    CHECK(cc[2] == doctest::Approx(std::sqrt(3.0)));

    const double r3 = std::sqrt(3.0);
    for (double k : {0.0, 1.0, 1.5, r3 - 1e-6}) {
        CHECK(!plane_avoids(height_plane(k), env));
        CHECK(!plane_avoids(height_plane(-k), env));
    }
    for (double k : {r3 + 1e-6, 2.0, 3.0, 100.0}) {
        CHECK(plane_avoids(height_plane(k), env));
        CHECK(plane_avoids(height_plane(-k), env));
    }
    const ProjectivePlane d = disjoint_spacelike_plane(g);
    CHECK(plane_classify(d) == PlaneClass::Spacelike);
    CHECK(plane_avoids(d, g.points()));
}

TEST_CASE("disjoint spacelike planes of random graphs") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 30; ++k) {
        const CircleGraph g = random_monotone_graph(rng, 3 + k * 5);
        const ProjectivePlane d = disjoint_spacelike_plane(g);
        CHECK(plane_classify(d) == PlaneClass::Spacelike);
        CHECK(plane_avoids(d, g.points()));
    }
    const ProjectivePlane id = disjoint_spacelike_plane(CircleGraph::of_mobius(Mat2::identity(), 20));
    CHECK(plane_classify(id) == PlaneClass::Spacelike);
}

TEST_CASE("flat hull of a Moebius graph") {
    for (const Mat2& m : {Mat2::identity(), Mat2::unimodular(2.0, 1.0, 1.0, 1.0)}) {
        const CircleGraph g = CircleGraph::of_mobius(m, 32);
        const HullComplex h = convex_hull(g);
        CHECK(h.flat);
        REQUIRE(h.faces.size() == 1u);
        CHECK(h.future_faces().size() == 1u);
        CHECK(bending_data(h).empty());
        const ExtractedEarthquake ex = extract_left_earthquake(h);
        REQUIRE(ex.faces.size() == 1u);
        CHECK(ex.faces[0].map.psl_distance(m) < 1e-9);
        CHECK(ex.shears.empty());
        CHECK(ex.total_shear() == 0.0);
        REQUIRE(graph_plane(g).has_value());
        CHECK(proportional(*graph_plane(g), plane_of_map(m), 1e-9));
    }
}

TEST_CASE("hull of the s-shear graph") {
    for (double s : {2.0, 4.0, 9.0}) {
        for (int n : {4, 5, 8, 64, 400}) {
            CAPTURE(s);
            CAPTURE(n);
            const CircleGraph g = shear_graph(s, n);
            const HullComplex h = convex_hull(g);
            CHECK(!h.flat);
            CHECK(h.future_faces().size() == 2u);
            CHECK(h.quadric_residual() < 1e-9);
            CHECK(h.convexity_violation() < 1e-9);
            for (const auto& f : h.faces) CHECK(f.kind != PlaneClass::Lorentzian);

            // the two future faces carry the identity and z -> s z
            const Mat2 scale{std::sqrt(s), 0.0, 0.0, 1.0 / std::sqrt(s)};
            std::vector<Mat2> maps;
            for (std::size_t f : h.future_faces()) maps.push_back(plane_map(h.faces[f].plane));
            REQUIRE(maps.size() == 2u);
            const bool order = maps[0].psl_distance(Mat2::identity()) < 1e-9;
            CHECK(maps[order ? 0 : 1].psl_distance(Mat2::identity()) < 1e-9);
            CHECK(maps[order ? 1 : 0].psl_distance(scale) < 1e-9);

            // bending: one edge, weight = dual-point distance of the two planes
            // pole of the identity plane J = (0, 1, -1, 0); of the other D J = (0, 1/sqrt s, -sqrt s, 0);
            // q_pair = (sqrt s + 1/sqrt s) / 2 = cosh(log s / 2)
            const double oracle = std::acosh(0.5 * (std::sqrt(s) + 1.0 / std::sqrt(s)));
            const auto bend = bending_data(h);
            REQUIRE(bend.size() == 1u);
            CHECK(std::abs(bend[0].weight - oracle) < 1e-9);
            CHECK(std::abs(bend[0].weight / std::log(s) - 0.5) < 1e-9);

            const ExtractedEarthquake ex = extract_left_earthquake(h);
            REQUIRE(ex.shears.size() == 1u);
            CHECK(std::abs(ex.shears[0].shear - std::log(s)) < 1e-9);
            // the bending line runs between 0 and infinity
            const double t0 = ex.shears[0].first.theta(), t1 = ex.shears[0].second.theta();
            CHECK(std::min(t0, t1) < 1e-12);
            CHECK(std::abs(std::max(t0, t1) - 0.5) < 1e-12);
            for (const auto& smp : g.samples()) CHECK(std::abs(ex.boundary(smp.left) - smp.right) < 1e-9);
        }
    }
    // s < 1 is the inverse map, a right earthquake: the two planar faces are on the past side
    const HullComplex inv = convex_hull(shear_graph(0.25, 16));
    CHECK(inv.past_faces().size() == 2u);
    CHECK(inv.future_faces().size() > 2u);
    CHECK(convex_hull(shear_graph(1.0, 16)).flat);
    CHECK_THROWS_AS(shear_graph(2.0, 3), InvalidInput);
    CHECK_THROWS_AS(shear_graph(-1.0, 8), InvalidInput);
}

TEST_CASE("chart plane must avoid the graph") {
    const CircleGraph g = shear_graph(4.0, 16);
    CHECK_THROWS_AS(convex_hull(g, ProjectivePlane{0, 1, -1, 0}), InvalidInput);
    // any disjoint chart gives the same faces
    const HullComplex a = convex_hull(g, height_plane(10.0));
    const HullComplex b = convex_hull(g);
    CHECK(a.faces.size() == b.faces.size());
    CHECK(a.future_faces().size() == b.future_faces().size());
}

TEST_CASE("equivariance under isometries") {
    std::mt19937_64 rng(31);
    const CircleGraph g = shear_graph(4.0, 64);
    const auto base = bending_data(convex_hull(g));
    const double base_shear = extract_left_earthquake(convex_hull(g)).total_shear();
    for (int i = 0; i < 5; ++i) {
        const Mat2 a = random_sl2(rng), b = random_sl2(rng);
        const CircleGraph t = g.transformed(a, b);
        const HullComplex h = convex_hull(t);
        CHECK(h.future_faces().size() == 2u);
        const auto bend = bending_data(h);
        REQUIRE(bend.size() == base.size());
        CHECK(std::abs(bend[0].weight - base[0].weight) < 1e-9);
        CHECK(std::abs(extract_left_earthquake(h).total_shear() - base_shear) < 1e-9);
    }
}

TEST_CASE("hull causality on random graphs") {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 25; ++k) {
        const CircleGraph g = random_monotone_graph(rng, 10 + 8 * k);
        const HullComplex h = convex_hull(g);
        CHECK(h.quadric_residual() < 1e-9);
        CHECK(h.convexity_violation() < 1e-9);
        std::size_t lorentzian = 0;
        for (const auto& f : h.faces) lorentzian += f.kind == PlaneClass::Lorentzian;
        CHECK(lorentzian == 0u);
        CHECK(!h.future_faces().empty());
        CHECK(!h.past_faces().empty());
        for (const auto& d : bending_data(h)) CHECK(d.weight >= 0.0);
        const ExtractedEarthquake ex = extract_left_earthquake(h);
        // the extracted earthquake interpolates the samples
        for (const auto& s : g.samples()) {
            double d = std::fmod(std::abs(ex.boundary(s.left) - s.right), 1.0);
            CHECK(std::min(d, 1.0 - d) < 1e-8);
        }
    }
}

TEST_CASE("domain of dependence membership") {
    const CircleGraph shear = shear_graph(4.0, 64);
    CHECK(dependence_membership(Mat2::identity(), shear) == Membership::Inside);
    CHECK(dependence_membership(Mat2{1.0, 5.0, 0.0, 0.01}, shear) == Membership::Outside);
    const CircleGraph id = CircleGraph::of_mobius(Mat2::identity(), 32);
    const R22Vector pole = dual_point(disjoint_spacelike_plane(id));
    CHECK(dependence_membership(pole.matrix(), id) == Membership::Indeterminate);
    CHECK_THROWS_AS(dependence_membership(Mat2{1.0, 1.0, 1.0, 1.0}, shear), InvalidInput);
    CHECK(std::string(to_string(Membership::Inside)) == "inside");
}

TEST_CASE("conjugacy sampling") {
    const Representation rep = regular_polygon_rep(2);
    const CircleGraph same = sample_conjugacy(rep, rep, 3);
    CHECK(same.size() > 100u);
    for (const auto& s : same.samples()) CHECK(std::abs(s.left - s.right) < 1e-9);

    const Mat2 g = Mat2::unimodular(2.0, 1.0, 1.0, 1.0);
    const CircleGraph conj = sample_conjugacy(rep, rep.conjugated(g), 3);
    for (const auto& s : conj.samples()) {
        const double expect = IdealPoint::from_angle(s.left).transformed(g).theta();
        double d = std::fmod(std::abs(s.right - expect), 1.0);
        CHECK(std::min(d, 1.0 - d) < 1e-9);
    }
    CHECK(convex_hull(conj).flat);

    CHECK_THROWS_AS(sample_conjugacy(rep, Representation::trivial(2), 2), NotHyperbolic);
    CHECK_THROWS_AS(sample_conjugacy(rep, regular_polygon_rep(3), 2), InvalidInput);
    CHECK_THROWS_AS(sample_conjugacy(rep, rep, 0), InvalidInput);

    ConjugacyOptions opt;
    opt.max_samples = 50;
    CHECK(sample_conjugacy(rep, rep, 3, opt).size() <= 50u);
}
