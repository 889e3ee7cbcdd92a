#include <doctest.h>

#include <set>

#include "waring/strata.hpp"
#include "waring/sylvester.hpp"

using namespace waring;
using namespace waring::sylvester;
using exact::rat;
using exact::Rational;
using exact::Vec;

namespace {

// f = sum_i c_i (x + t_i y)^e, i.e. a_j = sum_i c_i t_i^j
BinForm power_sum(unsigned e, const std::vector<Rational>& ts, const std::vector<Rational>& cs) {
    Vec a(e + 1, Rational(0));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rational p(1);
        for (unsigned j = 0; j <= e; ++j) {
            a[j] += cs[i] * p;
            p *= ts[i];
        }
    }
    return BinForm(e, a);
}

}  // namespace

TEST_CASE("moment matrix of x^4 + y^4") {
    BinForm f(4, {rat(1), rat(0), rat(0), rat(0), rat(1)});
    exact::Matrix h = hankel(f, 2);
    REQUIRE(h.rows == 3);
    REQUIRE(h.cols == 3);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(2, 2) == 1);
    CHECK(h.at(1, 1) == 0);
    CHECK(border_rank_binary(f) == 2);
    RankResult r = rank_binary(f);
    CHECK(r.rank == 2);
    CHECK(r.squarefree);
    CHECK(r.g == Vec{rat(0), rat(1), rat(0)});  // g = xy
    CHECK_THROWS_AS(hankel(f, 5), std::invalid_argument);
}

TEST_CASE("x^3 y has border rank 2 and rank 4") {
    RankResult r = rank_binary(BinForm(4, {rat(0), rat(1), rat(0), rat(0), rat(0)}));
    CHECK(r.border_rank == 2);
    CHECK(r.rank == 4);
    CHECK_FALSE(r.squarefree);
}

TEST_CASE("pure powers have rank one") {
    for (unsigned e : {3u, 6u, 9u}) {
        Vec a(e + 1, Rational(0));
        a[0] = 1;  // (x + 0*y)^e
        RankResult r = rank_binary(BinForm(e, a));
        CHECK(r.rank == 1);
        CHECK(r.border_rank == 1);
        Rational p(1);
        for (unsigned j = 0; j <= e; ++j, p *= 3) a[j] = p;  // (x + 3y)^e
        r = rank_binary(BinForm(e, a));
        CHECK(r.rank == 1);
    }
    Vec zero(5, Rational(0));
    CHECK_THROWS_AS(BinForm(4, zero), std::invalid_argument);
}

TEST_CASE("sums of distinct powers recover their length") {
    strata::Sampler rng(13);
    for (unsigned e = 4; e <= 9; ++e) {
        for (int trial = 0; trial < 30; ++trial) {
            unsigned r = static_cast<unsigned>(rng.pick(1, (e + 1) / 2));
            std::set<long> used;
            std::vector<Rational> ts, cs;
            while (ts.size() < r) {
                long t = rng.pick(-20, 20);
                if (used.insert(t).second) ts.push_back(Rational(t));
            }
            for (unsigned i = 0; i < r; ++i) cs.push_back(rng.nonzero_coeff());
            RankResult rr = rank_binary(power_sum(e, ts, cs));
            CHECK(rr.rank == r);
            CHECK(rr.border_rank == r);
        }
    }
}

TEST_CASE("rank and border rank of a jet point are dual") {
    // a point of the span of the order-k jet of the degree-e moment curve,
    // outside the order-(k-1) jet, has border rank k and rank e - k + 2
    unsigned e = 8;
    for (unsigned k = 2; k <= 4; ++k) {
        Vec a(e + 1, Rational(0));
        for (unsigned j = 0; j < k; ++j)
            for (unsigned i = j; i <= e; ++i) {
                Rational fall(1);
                for (unsigned q = 0; q < j; ++q) fall *= Rational(i - q);
                Rational p(1);
                for (unsigned q = 0; q < i - j; ++q) p *= rat(2);
                a[i] += rat(j + 1) * fall * p;
            }
        RankResult r = rank_binary(BinForm(e, a));
        CHECK(r.border_rank == k);
        CHECK(r.rank == e - k + 2);
        CHECK(r.rank + r.border_rank == e + 2);
        CHECK_FALSE(r.squarefree);
    }
}

TEST_CASE("rank of a point with respect to a parametrized curve") {
    unsigned d = 6;
    geom::ParamCurve line =
        geom::line_through(geom::plane_point(1, 0, 0), geom::plane_point(0, 1, 0));
    // an actual curve point has rank one
    geom::ProjPoint p = geom::veronese(line.point_at(rat(3)), d);
    RankResult r = curve_point_rank(p, line, d);
    CHECK(r.rank == 1);
    CHECK(r.border_rank == 1);

    // a combination of two curve points has rank two
    Vec q = p.coords;
    Vec other = geom::veronese_vec(line.point_at(rat(-1)), d);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += other[i];
    r = curve_point_rank(geom::ProjPoint(static_cast<unsigned>(q.size() - 1), q), line, d);
    CHECK(r.rank == 2);

    // off-curve points are rejected
    CHECK_THROWS_AS(curve_point_rank(geom::veronese(geom::plane_point(1, 1, 1), d), line, d),
                    std::invalid_argument);
}

TEST_CASE("conic points double the effective degree") {
    unsigned d = 6;
    geom::ParamCurve conic = geom::standard_conic(2);
    geom::ProjPoint p = geom::veronese(conic.point_at(rat(2)), d);
    RankResult r = curve_point_rank(p, conic, d);
    CHECK(r.e == 2 * d);
    CHECK(r.rank == 1);
}
