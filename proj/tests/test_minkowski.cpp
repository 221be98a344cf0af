#include "doctest.h"

#include <cmath>
#include <random>

#include "ccs/minkowski.hpp"

using namespace ccs;

namespace {

Mat2 random_sl2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (;;) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        const double det = a * d - b * c;
        if (det > 0.1) return Mat2::normalized(a, b, c, d);
    }
}

HyperbolicPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> r(0.0, 2.5), th(0.0, 2.0 * M_PI);
    return HyperbolicPoint::polar(r(rng), th(rng));
}

}  // namespace

TEST_CASE("inner product examples") {
    CHECK(minkowski_inner({0, 0, 1}, {0, 0, 1}) == -1.0);
    CHECK(minkowski_inner({1, 0, 0}, {0, 1, 0}) == 0.0);
    CHECK(minkowski_inner({1, 0, 1}, {1, 0, 1}) == 0.0);
    CHECK(minkowski_inner({1, 2, 3}, {4, 5, 6}) == minkowski_inner({4, 5, 6}, {1, 2, 3}));
}

TEST_CASE("classify") {
    CHECK(classify({0, 0, 1}) == CausalClass::Timelike);
    CHECK(classify({1, 0, 1}) == CausalClass::Null);
    CHECK(classify({1, 2, 0}) == CausalClass::Spacelike);
    CHECK(classify({0, 0, 0}) == CausalClass::Zero);
    CHECK(std::string(to_string(CausalClass::Null)) == "null");

    SUBCASE("scale invariance") {
        const MinkowskiVector vs[] = {{0.3, 0.1, 1.0}, {1.0, 0.0, 1.0}, {1.0, 2.0, 0.5}, {0.6, 0.8, 1.0}};
        for (const auto& v : vs)
            for (double c = 1e-6; c <= 1e6; c *= 10.0) {
                CHECK(classify(v * c, 1e-9) == classify(v, 1e-9));
                CHECK(classify(v * -c, 1e-9) == classify(v, 1e-9));
            }
    }
}

TEST_CASE("Mat2 canonical sign and validation") {
    const Mat2 m = Mat2::unimodular(-2.0, -1.0, -1.0, -1.0);
    CHECK(m.a == 2.0);
    CHECK(m.d == 1.0);
    CHECK(Mat2::unimodular(0.0, -1.0, 1.0, 0.0).b == 1.0);
    CHECK_THROWS_AS(Mat2::unimodular(1.0, 1.0, 1.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(Mat2::normalized(1.0, 0.0, 0.0, -1.0), InvalidInput);
    const Mat2 n = Mat2::normalized(4.0, 0.0, 0.0, 1.0);
    CHECK(n.a == doctest::Approx(2.0));
    CHECK(n.d == doctest::Approx(0.5));
    CHECK(Mat2::identity().psl_distance(Mat2{-1.0, 0.0, 0.0, -1.0}) == 0.0);
}

TEST_CASE("adjoint representation") {
    const LorentzLinear id = adjoint_to_so21(Mat2::identity());
    CHECK(id.max_abs_diff(LorentzLinear()) < 1e-15);
    CHECK(adjoint_to_so21(Mat2{-1.0, 0.0, 0.0, -1.0}).max_abs_diff(LorentzLinear()) < 1e-15);

    SUBCASE("diagonal element is the boost fixing y") {
        for (double l : {0.1, 1.0, 2.5}) {
            const Mat2 d{std::exp(l / 2), 0.0, 0.0, std::exp(-l / 2)};
            const LorentzLinear a = adjoint_to_so21(d);
            CHECK(a.max_abs_diff(boost_y_fixed(l)) < 1e-12);
            // hand expansion: X(x, 0, t) -> D X D^{-1} scales x+t by e^l and x-t by e^-l
            CHECK(a(0, 0) == doctest::Approx(std::cosh(l)));
            CHECK(a(0, 2) == doctest::Approx(std::sinh(l)));
            CHECK(a(2, 0) == doctest::Approx(std::sinh(l)));
            CHECK(a(1, 1) == 1.0);
        }
    }

    SUBCASE("homomorphism and form preservation") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            const Mat2 m1 = random_sl2(rng), m2 = random_sl2(rng);
            const LorentzLinear a1 = adjoint_to_so21(m1), a2 = adjoint_to_so21(m2);
            CHECK(a1.form_residual() < 1e-9);
            CHECK(a1(2, 2) >= 1.0);
            CHECK(adjoint_to_so21(m1 * m2).max_abs_diff(a1 * a2) < 1e-9 * (1 + a1(2, 2) * a2(2, 2)));
        }
    }

    CHECK_THROWS_AS(adjoint_to_so21(Mat2{2.0, 0.0, 0.0, 2.0}), InvalidInput);
}

TEST_CASE("LorentzLinear validation") {
    CHECK_THROWS_AS(LorentzLinear::from_matrix({2, 0, 0, 0, 1, 0, 0, 0, 1}), InvalidInput);
    // reflection: preserves the form but det -1
    CHECK_THROWS_AS(LorentzLinear::from_matrix({-1, 0, 0, 0, 1, 0, 0, 0, 1}), InvalidInput);
    // time reversal composed with a reflection: det 1 but not orthochronous
    CHECK_THROWS_AS(LorentzLinear::from_matrix({-1, 0, 0, 0, 1, 0, 0, 0, -1}), InvalidInput);
    const LorentzLinear r = rotation_t_fixed(0.7);
    CHECK((r * r.inverse()).max_abs_diff(LorentzLinear()) < 1e-15);
}

TEST_CASE("traceless coordinates") {
    const MinkowskiVector v{0.3, -1.2, 0.8};
    const Mat2 x = traceless_matrix(v);
    CHECK(x.a + x.d == 0.0);
    CHECK(-x.det() == doctest::Approx(minkowski_inner(v, v)));
    const MinkowskiVector w = traceless_coords(x);
    CHECK(sup_norm(w - v) < 1e-15);
}

TEST_CASE("hyperbolic distance") {
    const HyperbolicPoint o = HyperbolicPoint::apex();
    CHECK(h2_distance(o, o) == 0.0);
    for (double l : {0.2, 1.0, 3.0}) {
        const HyperbolicPoint p = o.transformed(boost_y_fixed(l));
        CHECK(h2_distance(o, p) == doctest::Approx(l).epsilon(1e-12));
    }
    CHECK_THROWS_AS(HyperbolicPoint::project({1.0, 0.0, 0.5}), InvalidInput);

    SUBCASE("triangle inequality and isometry invariance") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            const HyperbolicPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
            CHECK(h2_distance(p, r) <= h2_distance(p, q) + h2_distance(q, r) + 1e-9);
            const Mat2 m = random_sl2(rng);
            CHECK(std::abs(h2_distance(p.transformed(m), q.transformed(m)) - h2_distance(p, q)) < 1e-9);
        }
    }

    SUBCASE("upper half plane chart") {
        const HyperbolicPoint i = HyperbolicPoint::from_upper_half_plane({0.0, 1.0});
        CHECK(sup_norm(i.vec() - o.vec()) < 1e-15);
        const std::complex<double> z{0.4, 2.0};
        const auto back = HyperbolicPoint::from_upper_half_plane(z).to_upper_half_plane();
        CHECK(std::abs(back - z) < 1e-12);
        // Moebius action agrees with the adjoint action
        const Mat2 m = Mat2::unimodular(2.0, 1.0, 1.0, 1.0);
        const auto w = HyperbolicPoint::from_upper_half_plane(z).transformed(m).to_upper_half_plane();
        CHECK(std::abs(w - (2.0 * z + 1.0) / (z + 1.0)) < 1e-12);
    }

    SUBCASE("geodesic lerp") {
        const HyperbolicPoint p = HyperbolicPoint::polar(1.0, 0.3), q = HyperbolicPoint::polar(2.0, 2.0);
        const HyperbolicPoint m = h2_lerp(p, q, 0.25);
        CHECK(h2_distance(p, m) == doctest::Approx(0.25 * h2_distance(p, q)));
    }
}

TEST_CASE("ideal points") {
    const IdealPoint inf = IdealPoint::from_vector(1.0, 0.0);
    CHECK(inf.theta() == 0.0);
    CHECK(IdealPoint::from_real(0.0).theta() == doctest::Approx(0.5));
    CHECK(IdealPoint::from_vector(-1.0, 0.0).theta() == 0.0);  // projective
    CHECK(IdealPoint::from_angle(1.25).theta() == doctest::Approx(0.25));
    CHECK_THROWS_AS(IdealPoint::from_vector(0.0, 0.0), InvalidInput);
    const MinkowskiVector n = IdealPoint::from_real(0.7).null_vector();
    CHECK(std::abs(minkowski_inner(n, n)) < 1e-15);
    CHECK(n.t == doctest::Approx(1.0));
    CHECK(IdealPoint::from_angle(0.05).circle_distance(IdealPoint::from_angle(0.95)) == doctest::Approx(0.1));
}

TEST_CASE("geodesic normals") {
    // endpoints 0 and infinity are the null directions (-+1, 0, 1): the geodesic in the plane y = 0
    const IdealPoint zero = IdealPoint::from_real(0.0), inf = IdealPoint::from_vector(1.0, 0.0);
    const MinkowskiVector n = geodesic_normal(zero, inf);
    CHECK(std::abs(std::abs(n.y) - 1.0) < 1e-12);
    CHECK(std::abs(n.x) < 1e-12);
    CHECK(std::abs(n.t) < 1e-12);
    CHECK_THROWS_AS(geodesic_normal(IdealPoint::from_real(1.0), IdealPoint::from_real(1.0)), DegenerateGeometry);

    const MinkowskiVector side{0.0, 1.0, 1.5};
    CHECK(minkowski_inner(geodesic_normal(zero, inf, side), side) > 0);
    CHECK(minkowski_inner(geodesic_normal(inf, zero, side), side) > 0);
    // the unit circle |z| = 1 lies in the plane x = 0
    CHECK(std::abs(geodesic_normal(IdealPoint::from_real(1.0), IdealPoint::from_real(-1.0)).x) == doctest::Approx(1.0));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 30; ++i) {
        const IdealPoint e1 = IdealPoint::from_angle(u(rng)), e2 = IdealPoint::from_angle(u(rng));
        if (e1.circle_distance(e2) < 1e-3) continue;
        const MinkowskiVector m = geodesic_normal(e1, e2);
        CHECK(std::abs(minkowski_inner(m, m) - 1.0) < 1e-12);
        const Mat2 rot = Mat2::unimodular(std::cos(0.1 * M_PI), -std::sin(0.1 * M_PI), std::sin(0.1 * M_PI),
                                          std::cos(0.1 * M_PI));
        const MinkowskiVector mr = geodesic_normal(e1.transformed(rot), e2.transformed(rot));
        const MinkowskiVector expect = adjoint_to_so21(rot).apply(m);
        CHECK(sup_norm(mr - expect) < 1e-9);
    }
}
