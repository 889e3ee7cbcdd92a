#include <doctest.h>

#include "waring/geom.hpp"

using namespace waring;
using namespace waring::geom;
using exact::rat;
using exact::Rational;
using exact::Vec;

TEST_CASE("ambient dimension of the space of degree-d forms") {
    CHECK(ambient_dim(1, 3) == 3);
    CHECK(ambient_dim(2, 4) == 14);
    CHECK(ambient_dim(2, 12) == 90);
    CHECK(ambient_dim(3, 12) == 454);
    CHECK_THROWS_AS(ambient_dim(0, 3), std::invalid_argument);
}

TEST_CASE("points normalize projectively") {
    CHECK(plane_point(2, 4, 6) == plane_point(1, 2, 3));
    CHECK_THROWS_AS(plane_point(0, 0, 0), std::invalid_argument);
    ProjPoint p(2, Vec{rat(0), rat(3), rat(6)});
    CHECK(p.coords == Vec{rat(0), rat(1), rat(2)});
}

TEST_CASE("monomial basis is graded lexicographic") {
    const auto& b = monomial_basis(2, 2);
    CHECK(b.size() == 6);
    CHECK(b.exps.front() == std::vector<unsigned>{2, 0, 0});
    CHECK(b.exps.back() == std::vector<unsigned>{0, 0, 2});
    CHECK(b.index_of({1, 1, 0}) == 1);
    CHECK_THROWS_AS(b.index_of({3, 0, 0}), std::invalid_argument);
}

TEST_CASE("cubic embedding of a point of the line") {
    ProjPoint p(1, Vec{rat(1), rat(2)});
    CHECK(veronese_vec(p, 3) == Vec{rat(1), rat(2), rat(4), rat(8)});
}

TEST_CASE("embedded lines and conics span spaces of dimension d and 2d") {
    ParamCurve line = line_through(plane_point(1, 0, 0), plane_point(0, 1, 0));
    ParamCurve conic = standard_conic(2);
    for (unsigned d : {3u, 5u, 12u}) {
        CHECK(curve_span(line, d).dim() == d + 1);
        CHECK(curve_span(conic, d).dim() == 2 * d + 1);
    }
}

TEST_CASE("distinct curve points embed independently up to the span dimension") {
    ParamCurve line = line_through(plane_point(1, 2, 3), plane_point(1, -1, 4));
    unsigned d = 6;
    std::vector<Vec> rows;
    for (long t = 0; t < 7; ++t) rows.push_back(veronese_vec(line.point_at(rat(t)), d));
    CHECK(exact::rank(exact::Matrix::from_rows(rows)) == 7);
    rows.push_back(veronese_vec(line.point_at(rat(9)), d));
    CHECK(exact::rank(exact::Matrix::from_rows(rows)) == 7);  // d+1 caps the span
}

TEST_CASE("line forms vanish exactly on the line") {
    ParamCurve line = line_through(plane_point(1, 0, 0), plane_point(0, 1, 0));
    Vec f = line_form(line);
    CHECK(eval_form(f, plane_point(3, -7, 0), 1) == 0);
    CHECK(eval_form(f, plane_point(0, 0, 1), 1) != 0);
}

TEST_CASE("conic through five general points is unique and smooth") {
    std::vector<ProjPoint> pts;
    for (long t : {-2, -1, 0, 1, 2}) pts.push_back(standard_conic(2).point_at(rat(t)));
    ConicThrough ct = conic_through(pts);
    CHECK(ct.unique);
    CHECK_FALSE(ct.degenerate);
    CHECK(ct.form == conic_form(standard_conic(2)));
}

TEST_CASE("conic through points with a collinear quadruple degenerates") {
    ParamCurve line = line_through(plane_point(1, 0, 0), plane_point(0, 1, 0));
    std::vector<ProjPoint> pts;
    for (long t : {0, 1, 2, 3}) pts.push_back(line.point_at(rat(t)));
    pts.push_back(plane_point(1, 1, 1));
    ConicThrough ct = conic_through(pts);
    CHECK(ct.degenerate);
}

TEST_CASE("form pullback to a curve tracks intersection orders") {
    ParamCurve conic = standard_conic(2);
    ParamCurve tangent = line_through(plane_point(1, 0, 0), plane_point(0, 1, 0));
    // the line x2 = 0 is tangent to [1 : t : t^2] at t = 0
    auto pb = compose_form(line_form(tangent), 1, conic);
    CHECK(exact::vanishing_order(pb, rat(0)) == 2);
}

TEST_CASE("plane configurations embed into larger spaces") {
    ProjPoint p = plane_point(1, 2, 3);
    ProjPoint q = embed_point(p, 4);
    CHECK(q.m == 4);
    CHECK(q.coords == Vec{rat(1), rat(2), rat(3), rat(0), rat(0)});
    ParamCurve c = embed_curve(standard_conic(2), 3);
    CHECK(c.m == 3);
    CHECK(c.point_at(rat(2)) == ProjPoint(3, Vec{rat(1), rat(2), rat(4), rat(0)}));
}
