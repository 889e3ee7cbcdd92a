#include <doctest.h>

#include "waring/scheme.hpp"
#include "waring/strata.hpp"

using namespace waring;
using namespace waring::schemes;
using exact::rat;
using exact::Vec;
using geom::ParamCurve;
using geom::plane_point;
using geom::ProjPoint;

namespace {

ParamCurve x_axis() { return geom::line_through(plane_point(1, 0, 0), plane_point(0, 1, 0)); }

Scheme jet_on(const ParamCurve& c, long t0, unsigned k) {
    Scheme z;
    z.m = c.m;
    z.components.push_back({c, rat(t0), k});
    return z;
}

Scheme points_on(const ParamCurve& c, std::vector<long> ts) {
    Scheme z;
    z.m = c.m;
    for (long t : ts) z.components.push_back({c, rat(t), 1});
    return z;
}

}  // namespace

TEST_CASE("jet conditions are consecutive derivative rows") {
    Scheme z = jet_on(x_axis(), 0, 2);
    exact::Matrix m = conditions_matrix(z, 2);
    REQUIRE(m.rows == 2);
    // basis x0^2, x0x1, x0x2, x1^2, x1x2, x2^2 at gamma(t) = [1 : t : 0]
    CHECK(m.row(0) == Vec{rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)});
    CHECK(m.row(1) == Vec{rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)});
}

TEST_CASE("too many collinear points create a defect") {
    CHECK(h01(points_on(x_axis(), {0, 1, 2, 3, 4, 5}), 4).h1 == 1);
    CHECK(h01(points_on(x_axis(), {0, 1, 2, 3, 4}), 4).h1 == 0);
    Scheme empty;
    empty.m = 2;
    CHECK(h01(empty, 4).h1 == 0);
    CHECK(h01(empty, 4).h0 == 15);
}

TEST_CASE("too many points on a conic create a defect") {
    Scheme z = points_on(geom::standard_conic(2), {-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6});
    CHECK(z.degree() == 12);
    CHECK(h01(z, 5).h1 == 1);
}

TEST_CASE("subscheme enumeration is the product of jet choices") {
    CHECK(subschemes(jet_on(x_axis(), 0, 3)).size() == 4);
    Scheme two = jet_on(x_axis(), 0, 3);
    two.components.push_back({geom::standard_conic(2), rat(1), 3});
    CHECK(subschemes(two).size() == 16);
}

TEST_CASE("residual by a transverse line drops one jet order") {
    Scheme z = jet_on(x_axis(), 0, 3);
    ParamCurve transverse = geom::line_through(plane_point(1, 0, 0), plane_point(0, 0, 1));
    Divisor dv = Divisor::from_line(transverse);
    Scheme res = residual(z, dv);
    REQUIRE(res.components.size() == 1);
    CHECK(res.components[0].k == 2);
    CHECK(deg_intersect(z, dv) == 1);
    // the carrier line itself removes the whole jet
    CHECK(residual(z, Divisor::from_line(x_axis())).degree() == 0);
    CHECK(deg_intersect(z, Divisor::from_line(x_axis())) == 3);
}

TEST_CASE("residual degree bookkeeping holds for random divisors") {
    strata::Sampler rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Scheme z = points_on(x_axis(), {0, 2, 5});
        z.components.push_back({geom::standard_conic(2), rat(1), 2});
        ProjPoint p = rng.plane_point(), q = rng.plane_point();
        if (p == q) continue;
        Divisor dv = Divisor::from_line(geom::line_through(p, q));
        CHECK(residual(z, dv).degree() + deg_intersect(z, dv) == z.degree());
    }
}

TEST_CASE("detector finds a line carrying d+2 points") {
    unsigned d = 5;
    auto hit = excess_curve_detect(points_on(x_axis(), {0, 1, 2, 3, 4, 5, 6}), d);
    REQUIRE(hit.has_value());
    CHECK(hit->kind == ExcessCurve::Kind::line);
    CHECK(hit->deg_meet == 7);
    CHECK_FALSE(excess_curve_detect(points_on(x_axis(), {0, 1, 2, 3, 4, 5}), d).has_value());
}

TEST_CASE("detector finds the conic and the reducible pair") {
    unsigned d = 5;
    Scheme z = points_on(geom::standard_conic(2), {-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6});
    auto hit = excess_curve_detect(z, d);
    REQUIRE(hit.has_value());
    CHECK(hit->kind == ExcessCurve::Kind::conic);

    ParamCurve other = geom::line_through(plane_point(1, 0, 0), plane_point(0, 0, 1));
    Scheme pair = points_on(x_axis(), {1, 2, 3, 4, 5, 6});
    for (long t : {1, 2, 3, 4, 5, 6}) pair.components.push_back({other, rat(t), 1});
    CHECK(h01(pair, d).h1 > 0);
    auto hit2 = excess_curve_detect(pair, d);
    REQUIRE(hit2.has_value());
    CHECK(hit2->deg_meet >= 2 * d + 2);
}

TEST_CASE("detector preconditions") {
    CHECK_THROWS_AS(excess_curve_detect(points_on(x_axis(), {0}), 0), std::invalid_argument);
    Scheme big = jet_on(x_axis(), 0, 20);
    CHECK_THROWS_AS(excess_curve_detect(big, 5), std::invalid_argument);
}

TEST_CASE("detector agrees with the defect on structured samples") {
    strata::Sampler rng(3);
    unsigned d = 6;
    for (int trial = 0; trial < 40; ++trial) {
        ProjPoint p = rng.plane_point(), q = rng.plane_point();
        if (p == q) continue;
        ParamCurve line = geom::line_through(p, q);
        int n = static_cast<int>(rng.pick(2, static_cast<long>(d) + 4));
        std::vector<long> ts;
        for (int i = 0; i < n; ++i) ts.push_back(i);
        Scheme z = points_on(line, ts);
        for (int e = rng.pick(0, 3); e > 0; --e) {
            ProjPoint a = rng.plane_point(), b = rng.plane_point();
            if (a == b) continue;
            z.components.push_back({geom::line_through(a, b), rat(0), 1});
        }
        if (z.degree() >= 3 * d) continue;
        CHECK((h01(z, d).h1 > 0) == excess_curve_detect(z, d).has_value());
    }
}
