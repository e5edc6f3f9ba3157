#include "goldman/error.hpp"
#include "goldman/moebius.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace goldman;

namespace {

Isometry random_hyperbolic(std::mt19937& rng) {
    std::uniform_real_distribution<double> tr(2.2, 6.0);
    std::uniform_real_distribution<double> rot(-3.0, 3.0);
    // Conjugate a diagonal matrix by a random element of SL(2,R).
    double t = tr(rng);
    double lam = (t + std::sqrt(t * t - 4.0)) / 2.0;
    Isometry d(lam, 0, 0, 1 / lam);
    double x = rot(rng), y = rot(rng);
    Isometry g(1, x, 0, 1);
    Isometry h(1, 0, y, 1);
    Isometry c = g * h;
    return c * d * c.inverse();
}

}  // namespace

TEST_CASE("group structure and normalization") {
    Isometry g(2, 1, 3, 2);
    CHECK(g.det() == doctest::Approx(1.0));
    Isometry neg(-2, -1, -3, -2);
    CHECK(approx_equal_up_to_sign(g, neg, 1e-12));
    Isometry gi = g * g.inverse();
    CHECK(approx_equal_up_to_sign(gi, Isometry(), 1e-12));
    // Scalar multiples normalize to the same projective element.
    Isometry scaled(4, 2, 6, 4);
    CHECK(approx_equal_up_to_sign(g, scaled, 1e-12));
}

TEST_CASE("large-entry products keep determinant 1") {
    std::mt19937 rng(3);
    Isometry p;
    for (int i = 0; i < 40; ++i) p = p * random_hyperbolic(rng);
    CHECK(std::abs(p.det() - 1.0) < 1e-6 * std::abs(p.a() * p.d()) + 1e-9);
    // Roundoff in p * p^{-1} scales with the squared entry size.
    double scale = std::max({std::abs(p.a()), std::abs(p.b()), std::abs(p.c()),
                             std::abs(p.d())});
    Isometry q = p * p.inverse();
    CHECK(approx_equal_up_to_sign(q, Isometry(), 1e-12 * scale * scale + 1e-9));
}

TEST_CASE("classification") {
    CHECK(classify(Isometry(2, 0, 0, 0.5)) == IsometryType::Hyperbolic);
    CHECK(classify(Isometry(1, 1, 0, 1)) == IsometryType::Parabolic);
    CHECK(classify(Isometry(0, -1, 1, 0)) == IsometryType::Elliptic);
    CHECK(classify(Isometry()) == IsometryType::Identity);
    CHECK(to_string(IsometryType::Hyperbolic) == "hyperbolic");
}

TEST_CASE("translation length matches displacement on the axis") {
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        Isometry g = random_hyperbolic(rng);
        double len = translation_length(g);
        Axis ax = axis(g);
        // Oracle: move a point of the axis and measure hyperbolic distance.
        std::complex<double> z;
        if (ax.repelling.infinite || ax.attracting.infinite) {
            double x0 = ax.repelling.infinite ? ax.attracting.x : ax.repelling.x;
            z = {x0, 1.0};
        } else {
            double c = (ax.repelling.x + ax.attracting.x) / 2.0;
            double r = std::abs(ax.attracting.x - ax.repelling.x) / 2.0;
            z = {c, r};
        }
        CHECK(hyperbolic_distance(z, g.apply(z)) == doctest::Approx(len).epsilon(1e-9));
        // Endpoints are fixed and oriented repelling -> attracting.
        if (!ax.attracting.infinite) {
            std::complex<double> w = g.apply({ax.attracting.x, 0.0});
            CHECK(std::abs(w.real() - ax.attracting.x) < 1e-7);
        }
    }
    CHECK_THROWS_AS(translation_length(Isometry(1, 1, 0, 1)), DomainError);
}

TEST_CASE("axis crossing predicate") {
    // (-1,1) and (0,2) interleave; (-1,1) and (2,4) do not.
    Axis a{BoundaryPoint::finite(-1), BoundaryPoint::finite(1)};
    Axis b{BoundaryPoint::finite(0), BoundaryPoint::finite(2)};
    Axis c{BoundaryPoint::finite(2), BoundaryPoint::finite(4)};
    Axis d{BoundaryPoint::finite(0), BoundaryPoint::at_infinity()};
    CHECK(axes_cross(a, b));
    CHECK_FALSE(axes_cross(a, c));
    CHECK(axes_cross(a, d));
    CHECK_FALSE(axes_cross(b, d));      // shares no interleaving
    CHECK_FALSE(axes_cross(a, a));      // coinciding
    Axis e{BoundaryPoint::finite(1), BoundaryPoint::finite(3)};
    CHECK_FALSE(axes_cross(a, e));      // shared endpoint
}

TEST_CASE("crossing data: perpendicular model case") {
    // Vertical geodesic x=0 upward vs unit semicircle right-to-left:
    // they meet at i at a right angle.
    Axis vert{BoundaryPoint::finite(0), BoundaryPoint::at_infinity()};
    Axis circ{BoundaryPoint::finite(1), BoundaryPoint::finite(-1)};
    CrossingData cd = crossing_data(vert, circ);
    CHECK(std::abs(cd.point - std::complex<double>(0, 1)) < 1e-12);
    CHECK(cd.forward_angle == doctest::Approx(3.14159265358979 / 2));
    // Frame (t2, t1) = (leftward, upward) is negatively oriented.
    CHECK(cd.sign == -1);
    CrossingData cd2 = crossing_data(vert, circ.reversed());
    CHECK(cd2.sign == 1);
    CHECK_THROWS_AS(crossing_data(vert, vert), DomainError);
}

TEST_CASE("crossing data reversal contracts") {
    std::mt19937 rng(17);
    for (int t = 0; t < 60; ++t) {
        Isometry g = random_hyperbolic(rng);
        Isometry h = random_hyperbolic(rng);
        Axis ag = axis(g), ah = axis(h);
        if (!axes_cross(ag, ah)) continue;
        CrossingData cd = crossing_data(ag, ah);
        CHECK(cd.forward_angle > 0);
        CHECK(cd.forward_angle < 3.14159265358979);
        CHECK(std::abs(std::abs(cd.tangent1) - 1.0) < 1e-9);
        CHECK(std::abs(std::abs(cd.tangent2) - 1.0) < 1e-9);
        // Swapping the axes flips the frame orientation, keeps the angle.
        CrossingData sw = crossing_data(ah, ag);
        CHECK(sw.sign == -cd.sign);
        CHECK(sw.forward_angle == doctest::Approx(cd.forward_angle));
        // Reversing one axis flips the sign and complements the angle.
        CrossingData rv = crossing_data(ag, ah.reversed());
        CHECK(rv.sign == -cd.sign);
        CHECK(rv.forward_angle ==
              doctest::Approx(3.14159265358979 - cd.forward_angle));
    }
}

TEST_CASE("axis position increases under the isometry by its length") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        Isometry g = random_hyperbolic(rng);
        Axis ax = axis(g);
        std::complex<double> z;
        if (ax.repelling.infinite || ax.attracting.infinite) {
            double x0 = ax.repelling.infinite ? ax.attracting.x : ax.repelling.x;
            z = {x0, 2.0};
        } else {
            double c = (ax.repelling.x + ax.attracting.x) / 2.0;
            double r = std::abs(ax.attracting.x - ax.repelling.x) / 2.0;
            z = std::complex<double>(c, 0) +
                r * std::exp(std::complex<double>(0, 1.1));
        }
        double s0 = axis_position(ax, z);
        double s1 = axis_position(ax, g.apply(z));
        CHECK(s1 - s0 == doctest::Approx(translation_length(g)).epsilon(1e-8));
    }
}

TEST_CASE("hyperbolic distance sanity") {
    using C = std::complex<double>;
    CHECK(hyperbolic_distance(C(0, 1), C(0, std::exp(1.0))) == doctest::Approx(1.0));
    CHECK(hyperbolic_distance(C(3, 2), C(3, 2)) == doctest::Approx(0.0));
    CHECK(hyperbolic_distance(C(0, 1), C(1, 1)) ==
          doctest::Approx(hyperbolic_distance(C(1, 1), C(0, 1))));
}

TEST_CASE("half-trace product law residual") {
    std::mt19937 rng(29);
    int checked = 0;
    for (int t = 0; t < 5000 && checked < 50; ++t) {
        Isometry g = random_hyperbolic(rng);
        Isometry h = random_hyperbolic(rng);
        if (!axes_cross(axis(g), axis(h))) continue;
        ++checked;
        CHECK(std::abs(check_cosh_product(g, h)) < 1e-6);
    }
    CHECK(checked == 50);
}
