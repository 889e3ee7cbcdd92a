#include <doctest.h>

#include "waring/certify.hpp"

using namespace waring;
using namespace waring::certify;
using exact::rat;
using exact::Rational;
using exact::Vec;
using geom::plane_point;
using geom::ProjPoint;
using strata::Witness;

TEST_CASE("flattening rank of structured points") {
    unsigned d = 12;
    // a single embedded point has rank one at every order
    ProjPoint p = geom::veronese(plane_point(1, 2, 3), d);
    for (unsigned k : {1u, 4u, 6u}) CHECK(flattening_rank(p, 2, d, k) == 1);
    CHECK_THROWS_AS(flattening_rank(p, 2, d, 0), std::invalid_argument);
    CHECK_THROWS_AS(flattening_rank(p, 2, d, d), std::invalid_argument);

    // a combination of s general points has mid-order rank s
    strata::Sampler rng(5);
    Vec sum(geom::ambient_dim(2, d) + 1, Rational(0));
    for (int i = 0; i < 4; ++i) {
        Vec v = geom::veronese_vec(rng.plane_point(), d);
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += v[j];
    }
    CHECK(flattening_rank(ProjPoint(static_cast<unsigned>(sum.size() - 1), sum), 2, d, 6) == 4);

    // a jet point of order b has mid-order rank b
    Witness w = strata::witness(2, 5, 12, 13, 1);  // middle band, b = 3
    geom::ProjPoint q = *w.inter.Q;
    CHECK(flattening_rank(q, 2, d, 6) == w.band.b);
}

TEST_CASE("border-rank certificate for a constructed witness") {
    Witness w = strata::witness(2, 5, 12, 13, 1);
    BrCert br = certify_border_rank(w);
    CHECK(br.border_rank == 5);
    CHECK(br.flattening_k == 6);
    CHECK(br.flattening_rank == 5);
    CHECK(br.membership);
    CHECK(br.minimal);
    CHECK(br.subschemes_checked > 0);
}

TEST_CASE("decomposition coefficients are all nonzero") {
    Witness w = strata::witness(2, 5, 12, 9, 1);
    SrUpper up = certify_sr_upper(w);
    REQUIRE(up.coefficients.size() == 9);
    for (const auto& c : up.coefficients) CHECK(c != 0);
}

TEST_CASE("tampered witnesses are refused, not partially certified") {
    Witness w = strata::witness(2, 5, 12, 9, 1);
    CHECK_NOTHROW(certify::certify(w));

    Witness bad = w;
    bad.B[3] = plane_point(1, 17, 23);  // perturb one point
    bad.B2[3] = bad.B[3];
    CHECK_THROWS_AS(certify::certify(bad), CertificationRefused);

    Witness wrong_r = w;
    wrong_r.r = 11;  // lies about the rank; |B| no longer matches
    CHECK_THROWS_AS(certify::certify(wrong_r), CertificationRefused);
}

TEST_CASE("residual-lemma instance on a middle witness") {
    Witness w = strata::witness(2, 5, 12, 11, 1);
    schemes::Divisor dl = schemes::Divisor::from_line(*w.inter.L);
    V4Report rep = verify_lemma_v4_instance(w.A2, w.B2, dl, w.d);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.e_independent);
    CHECK(rep.e_matches_residual);
    CHECK(rep.q_exists);
    CHECK(rep.divisor_degree == 1);
}

TEST_CASE("residual-lemma hypothesis failure claims no conclusion") {
    // pile d+2 extra points on a second line: the residual by the first
    // line keeps a defect, so the hypothesis fails
    geom::ParamCurve l1 = geom::line_through(plane_point(1, 0, 0), plane_point(0, 1, 0));
    geom::ParamCurve l2 = geom::line_through(plane_point(1, 0, 0), plane_point(0, 0, 1));
    unsigned d = 6;
    schemes::Scheme a;
    a.m = 2;
    a.components.push_back({l1, rat(0), 2});
    std::vector<ProjPoint> b;
    for (long t = 1; t <= static_cast<long>(d) + 2; ++t) b.push_back(l2.point_at(rat(t)));
    V4Report rep = verify_lemma_v4_instance(a, b, schemes::Divisor::from_line(l1), d);
    CHECK_FALSE(rep.hypothesis_ok);
    CHECK(rep.residual_h1 > 0);
    CHECK_FALSE(rep.conclusions_ok());
}

TEST_CASE("verification re-runs checks and spots edits") {
    Witness w = strata::witness(2, 5, 12, 9, 1);
    Certificate cert = certify::certify(w);
    CHECK_FALSE(verify_certificate(cert).has_value());

    Certificate edited = cert;
    edited.sr_upper.coefficients[0] += 1;
    auto fail = verify_certificate(edited);
    REQUIRE(fail.has_value());
    CHECK(*fail == "sr-upper-mismatch");

    Certificate stale = cert;
    stale.schema = "rank-cert/0";
    CHECK_THROWS_AS(verify_certificate(stale), SchemaMismatch);
}

TEST_CASE("falsification search finds plantable decompositions") {
    unsigned d = 8;
    ProjPoint p1 = plane_point(1, 2, 3), p2 = plane_point(1, -1, 4);
    std::vector<ProjPoint> pool{p1, p2, plane_point(1, 0, 1), plane_point(1, 5, 2)};

    // a Veronese point is found at size one
    Falsification f = falsify_search(geom::veronese(p1, d), pool, d, 1, 100, 3);
    CHECK(f.outcome == "found");
    CHECK(f.found_size == 1);

    // a sum of two pool points is found at size two
    Vec sum = geom::veronese_vec(p1, d);
    Vec other = geom::veronese_vec(p2, d);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other[i];
    f = falsify_search(ProjPoint(static_cast<unsigned>(sum.size() - 1), sum), pool, d, 2, 500,
                       3);
    CHECK(f.outcome == "found");
    CHECK(f.found_size == 2);

    // a point off every small span exhausts the budget
    f = falsify_search(geom::veronese(plane_point(1, 9, 11), d), pool, d, 2, 50, 3);
    CHECK(f.outcome == "exhausted");
    CHECK(f.tested == 50);
    CHECK_THROWS_AS(falsify_search(geom::veronese(p1, d), pool, d, 1, 0, 3),
                    std::invalid_argument);
}

TEST_CASE("certificates of every band carry their checklist") {
    for (unsigned r : {5u, 9u, 21u, 22u}) {
        Witness w = strata::witness(2, 5, 12, r, 2);
        Certificate cert = certify::certify(w);
        CHECK(cert.sr_lower.symmetric_rank == r);
        CHECK(!cert.sr_lower.checklist.empty());
        for (const auto& item : cert.sr_lower.checklist) CHECK(item.pass);
        if (r > 5) {
            CHECK(cert.h1_check > 0);
            CHECK(!cert.v4_reports.empty());
        }
    }
}
