#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/geom.hpp"
#include "waring/linalg.hpp"
#include "waring/scheme.hpp"
#include "waring/sylvester.hpp"

namespace waring::strata {

using exact::Rational;
using exact::SubspaceBasis;
using exact::Vec;
using geom::ParamCurve;
using geom::ProjPoint;
using schemes::Scheme;

struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InadmissibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BandTag {
    equal_rank,         // r = s
    middle,             // d+2-s <= r <= d+s-2, r+s = d (mod 2)
    top_even,           // 2d+2-s <= r <= 2d+s-7, r+s even: smooth conic
    top_odd_even_core,  // r+s odd, c = (2d+3+s-r)/2 even: two-lines core with jets (w,w)
    top_odd_odd_core,   // r+s odd, c odd: two-lines core with jets (w+1,w)
    inadmissible
};

inline std::string band_tag_name(BandTag t) {
    switch (t) {
        case BandTag::equal_rank: return "equal";
        case BandTag::middle: return "middle";
        case BandTag::top_even: return "top-even";
        case BandTag::top_odd_even_core: return "top-odd-even-core";
        case BandTag::top_odd_odd_core: return "top-odd-odd-core";
        case BandTag::inadmissible: return "inadmissible";
    }
    return "?";
}

struct Band {
    BandTag tag = BandTag::inadmissible;
    unsigned b = 0;  // jet degree (middle / top-even)
    unsigned c = 0;  // total core degree (top-odd)
    unsigned w = 0;  // per-line jet size (top-odd)
};

/// Classifies (m, s, d, r) into the admissible bands, or inadmissible.
/// Throws HypothesisError outside m >= 2, s >= 5, d >= 2s+2, s <= r <= 2d+s-7.
inline Band admissible(unsigned m, unsigned s, unsigned d, unsigned r) {
    if (m < 2) throw HypothesisError("admissible: need m >= 2");
    if (s < 5) throw HypothesisError("admissible: need s >= 5");
    if (d < 2 * s + 2) throw HypothesisError("admissible: need d >= 2s+2");
    if (r < s || r > 2 * d + s - 7)
        throw HypothesisError("admissible: need s <= r <= 2d+s-7");
    Band band;
    if (r == s) {
        band.tag = BandTag::equal_rank;
        return band;
    }
    if (d + 2 - s <= r && r <= d + s - 2 && (r + s) % 2 == d % 2) {
        band.tag = BandTag::middle;
        band.b = (d + 2 + s - r) / 2;
        return band;
    }
    if (2 * d + 2 - s <= r && r <= 2 * d + s - 7) {
        if ((r + s) % 2 == 0) {
            band.tag = BandTag::top_even;
            band.b = (2 * d + 2 + s - r) / 2;
        } else {
            band.c = (2 * d + 3 + s - r) / 2;
            band.w = band.c / 2;
            band.tag = band.c % 2 == 0 ? BandTag::top_odd_even_core : BandTag::top_odd_odd_core;
        }
        return band;
    }
    return band;  // inadmissible
}

/// Index, per plane monomial of degree d, of the matching monomial of
/// P^m (exponents on x3..xm zero). Used to embed plane configurations.
inline std::vector<std::size_t> plane_monomial_embedding(unsigned m, unsigned d) {
    const auto& mb2 = geom::monomial_basis(2, d);
    const auto& mbm = geom::monomial_basis(m, d);
    std::vector<std::size_t> out;
    out.reserve(mb2.size());
    for (const auto& e : mb2.exps) {
        std::vector<unsigned> big = e;
        big.resize(m + 1, 0);
        out.push_back(mbm.index_of(big));
    }
    return out;
}

inline Vec embed_veronese_vec(const Vec& v, unsigned m, unsigned d) {
    auto map = plane_monomial_embedding(m, d);
    Vec out(geom::ambient_dim(m, d) + 1, Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[map[i]] = v[i];
    return out;
}

/// Deterministic source of "general" rational choices; every draw is
/// followed by an exact verification of the open condition it must satisfy.
struct Sampler {
    std::mt19937_64 gen;
    explicit Sampler(std::uint64_t seed) : gen(seed) {}

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    Rational nonzero_coeff() {
        long n = pick(1, 9);
        return Rational(pick(0, 1) ? n : -n);
    }

    ProjPoint plane_point() {
        return geom::plane_point(1, pick(-20, 20), pick(1, 20));
    }
};

struct Intermediates {
    std::optional<ParamCurve> L, L1, L2, C;
    std::vector<ProjPoint> E, B1, B2, Aprime;
    std::optional<ProjPoint> Q;           // intersection point on the carrier span
    std::optional<ProjPoint> Pprime;      // distinguished point of the pencil line M
    std::optional<ProjPoint> core_point;  // two-lines core point (top-odd bands)
    std::optional<SubspaceBasis> M;       // the pencil line (two-lines bands)
};

/// A constructed point with prescribed border rank s and symmetric rank r,
/// together with its evincing scheme A (degree s) and set B (size r).
/// For m > 2 the configuration lives in a coordinate plane; A, B, P are the
/// embedded ambient objects and A2, B2, P2 the plane-level copies.
struct Witness {
    unsigned m = 2, d = 0, s = 0, r = 0;
    Band band;
    std::uint64_t seed = 0;
    Scheme A;
    std::vector<ProjPoint> B;
    ProjPoint P;
    Scheme A2;
    std::vector<ProjPoint> B2;
    ProjPoint P2;
    Intermediates inter;
};

namespace detail {

inline Vec combine(const std::vector<Vec>& rows, const Vec& coeffs) {
    Vec out(rows.front().size(), Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (coeffs[i] != 0)
            for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * rows[i][j];
    return out;
}

inline std::vector<Vec> veronese_rows(const std::vector<ProjPoint>& pts, unsigned d) {
    std::vector<Vec> rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) rows.push_back(geom::veronese_vec(p, d));
    return rows;
}

/// Points gamma(t) for t = start, start+1, ..., skipping forbidden values.
inline std::vector<ProjPoint> curve_points(const ParamCurve& c, std::size_t count,
                                           const std::set<Rational>& avoid, long start = 1) {
    std::vector<ProjPoint> out;
    long t = start;
    while (out.size() < count) {
        if (!avoid.count(Rational(t))) out.push_back(c.point_at(Rational(t)));
        ++t;
    }
    return out;
}

inline bool independent(const std::vector<ProjPoint>& pts, unsigned d) {
    if (pts.empty()) return true;
    return exact::rank(exact::Matrix::from_rows(veronese_rows(pts, d))) == pts.size();
}

/// P avoids the span of every proper subscheme of A (full enumeration).
inline bool minimal_over(const Vec& p_coords, const Scheme& a, unsigned d) {
    for (const auto& f : schemes::subschemes(a)) {
        if (f.degree() == a.degree()) continue;
        if (exact::in_span(p_coords, schemes::span_image(f, d))) return false;
    }
    return true;
}

inline ProjPoint unique_intersection_point(const SubspaceBasis& s1, const SubspaceBasis& s2,
                                           unsigned n, const char* what) {
    SubspaceBasis meet = exact::intersect(s1, s2);
    if (meet.dim() != 1)
        throw ConstructionError(std::string(what) + ": intersection is not a single point");
    return ProjPoint(n, meet.vectors[0]);
}

constexpr int kRetryBudget = 32;

/// Standard plane frame used by all constructions.
inline ParamCurve frame_line1() {
    return geom::line_through(geom::plane_point(1, 0, 0), geom::plane_point(0, 1, 0));
}
inline ParamCurve frame_line2() {
    return geom::line_through(geom::plane_point(1, 0, 0), geom::plane_point(0, 0, 1));
}

/// Draws |count| plane points, each off the given divisors and distinct
/// from everything in `taken`.
inline std::vector<ProjPoint> general_points(Sampler& rng, std::size_t count,
                                             const std::vector<schemes::Divisor>& off,
                                             std::set<Vec>& taken) {
    std::vector<ProjPoint> out;
    int guard = 0;
    while (out.size() < count) {
        if (++guard > 4096) throw ConstructionError("general_points: sampling exhausted");
        ProjPoint p = rng.plane_point();
        bool bad = taken.count(p.coords) > 0;
        for (const auto& dv : off)
            if (!bad && dv.contains_point(p)) bad = true;
        if (bad) continue;
        taken.insert(p.coords);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace detail

namespace detail {

struct PlaneWitness {
    Scheme A;
    std::vector<ProjPoint> B;
    ProjPoint P;
    Intermediates inter;
};

inline PlaneWitness construct_equal(unsigned s, unsigned d, Sampler& rng) {
    unsigned n2 = static_cast<unsigned>(geom::ambient_dim(2, d));
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::set<Vec> taken;
        std::vector<ProjPoint> pts = general_points(rng, s, {}, taken);
        if (!independent(pts, d)) continue;
        Scheme a = schemes::scheme_of_points(pts, 2);
        auto rows = veronese_rows(pts, d);
        Vec coeffs(s);
        for (auto& c : coeffs) c = rng.nonzero_coeff();
        Vec p = combine(rows, coeffs);
        if (!minimal_over(p, a, d)) continue;
        PlaneWitness w;
        w.A = std::move(a);
        w.B = std::move(pts);
        w.P = ProjPoint(n2, std::move(p));
        return w;
    }
    throw ConstructionError("equal-rank construction: retry budget exhausted");
}

inline PlaneWitness construct_middle(unsigned s, unsigned d, unsigned r, unsigned b,
                                     Sampler& rng) {
    unsigned n2 = static_cast<unsigned>(geom::ambient_dim(2, d));
    ParamCurve line = frame_line1();
    schemes::Divisor line_div = schemes::Divisor::from_line(line);
    Scheme jet;  // b * O on the line, O = gamma(0)
    jet.m = 2;
    jet.components.push_back({line, Rational(0), b});
    std::vector<ProjPoint> a_prime = curve_points(line, d - b + 2, {Rational(0)});
    ProjPoint q = unique_intersection_point(schemes::span_image(jet, d),
                                            exact::span_of(veronese_rows(a_prime, d), n2 + 1),
                                            n2, "middle band");
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::set<Vec> taken;
        std::vector<ProjPoint> e = general_points(rng, s - b, {line_div}, taken);
        Scheme a = schemes::scheme_union(jet, e);
        if (schemes::h01(a, d).h1 != 0) continue;
        std::vector<ProjPoint> bset = a_prime;
        bset.insert(bset.end(), e.begin(), e.end());
        if (!independent(bset, d)) continue;
        std::vector<Vec> gens{q.coords};
        for (const auto& row : veronese_rows(e, d)) gens.push_back(row);
        Vec coeffs(gens.size());
        coeffs[0] = 1;
        for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = rng.nonzero_coeff();
        Vec p = combine(gens, coeffs);
        if (!minimal_over(p, a, d)) continue;
        PlaneWitness w;
        w.A = std::move(a);
        w.B = std::move(bset);
        w.P = ProjPoint(n2, std::move(p));
        w.inter.L = line;
        w.inter.E = std::move(e);
        w.inter.Aprime = a_prime;
        w.inter.Q = q;
        if (w.B.size() != r) throw ConstructionError("middle band: |B| != r");
        return w;
    }
    throw ConstructionError("middle band construction: retry budget exhausted");
}

inline PlaneWitness construct_top_even(unsigned s, unsigned d, unsigned r, unsigned b,
                                       Sampler& rng) {
    unsigned n2 = static_cast<unsigned>(geom::ambient_dim(2, d));
    ParamCurve conic = geom::standard_conic(2);
    schemes::Divisor conic_div = schemes::Divisor::from_conic(conic);
    Scheme jet;  // b * O' on the conic
    jet.m = 2;
    jet.components.push_back({conic, Rational(0), b});
    std::vector<ProjPoint> b1 = curve_points(conic, 2 * d + 2 - b, {Rational(0)});
    ProjPoint q = unique_intersection_point(schemes::span_image(jet, d),
                                            exact::span_of(veronese_rows(b1, d), n2 + 1), n2,
                                            "top-even band");
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::set<Vec> taken;
        std::vector<ProjPoint> e = general_points(rng, s - b, {conic_div}, taken);
        Scheme a = schemes::scheme_union(jet, e);
        if (schemes::h01(a, d).h1 != 0) continue;
        std::vector<ProjPoint> bset = b1;
        bset.insert(bset.end(), e.begin(), e.end());
        if (!independent(bset, d)) continue;
        std::vector<Vec> gens{q.coords};
        for (const auto& row : veronese_rows(e, d)) gens.push_back(row);
        Vec coeffs(gens.size());
        coeffs[0] = 1;
        for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = rng.nonzero_coeff();
        Vec p = combine(gens, coeffs);
        if (!minimal_over(p, a, d)) continue;
        PlaneWitness w;
        w.A = std::move(a);
        w.B = std::move(bset);
        w.P = ProjPoint(n2, std::move(p));
        w.inter.C = conic;
        w.inter.E = std::move(e);
        w.inter.B1 = b1;
        w.inter.Q = q;
        if (w.B.size() != r) throw ConstructionError("top-even band: |B| != r");
        return w;
    }
    throw ConstructionError("top-even band construction: retry budget exhausted");
}

/// Two concurrent lines with jets of degrees (a1, w) at O and O2; the
/// even core has a1 = w (border rank 2w), the odd core a1 = w+1.
inline PlaneWitness construct_two_lines(unsigned w, unsigned d, bool even_core, Sampler& rng) {
    unsigned a1 = even_core ? w : w + 1;
    if (even_core) {
        if (w < 3 || d < 4 * w - 1)
            throw HypothesisError("two-lines even core: need w >= 3, d >= 4w-1");
    } else {
        if (w < 2 || d < 4 * w + 1)
            throw HypothesisError("two-lines odd core: need w >= 2, d >= 4w+1");
    }
    unsigned n2 = static_cast<unsigned>(geom::ambient_dim(2, d));
    ParamCurve l1 = frame_line1(), l2 = frame_line2();
    Scheme jet1, a;
    jet1.m = a.m = 2;
    jet1.components.push_back({l1, Rational(0), a1});
    a.components.push_back({l1, Rational(0), a1});
    a.components.push_back({l2, Rational(1), w});  // O2 = gamma2(1)
    std::vector<ProjPoint> b1 = curve_points(l1, d + 2 - a1, {Rational(0)});
    std::vector<ProjPoint> b2 = curve_points(l2, d - w + 1, {Rational(0), Rational(1)}, 2);
    std::vector<ProjPoint> bset = b1;
    bset.insert(bset.end(), b2.begin(), b2.end());
    if (!independent(bset, d)) throw ConstructionError("two-lines core: B is not independent");
    ProjPoint p_prime = unique_intersection_point(
        schemes::span_image(jet1, d), exact::span_of(veronese_rows(b1, d), n2 + 1), n2,
        "two-lines core (P')");
    SubspaceBasis m_line = exact::intersect(schemes::span_image(a, d),
                                            exact::span_of(veronese_rows(bset, d), n2 + 1));
    if (m_line.dim() != 2) throw ConstructionError("two-lines core: pencil M is not a line");
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        Vec coeffs{Rational(1), rng.nonzero_coeff()};
        Vec p = combine(m_line.vectors, coeffs);
        ProjPoint pp(n2, p);
        if (pp == p_prime) continue;
        if (!minimal_over(pp.coords, a, d)) continue;
        PlaneWitness w_out;
        w_out.A = std::move(a);
        w_out.B = std::move(bset);
        w_out.P = std::move(pp);
        w_out.inter.L1 = l1;
        w_out.inter.L2 = l2;
        w_out.inter.B1 = std::move(b1);
        w_out.inter.B2 = std::move(b2);
        w_out.inter.Pprime = p_prime;
        w_out.inter.M = std::move(m_line);
        return w_out;
    }
    throw ConstructionError("two-lines core construction: retry budget exhausted");
}

inline PlaneWitness construct_top_odd(unsigned s, unsigned d, unsigned r, unsigned c,
                                      unsigned w, Sampler& rng) {
    unsigned n2 = static_cast<unsigned>(geom::ambient_dim(2, d));
    bool even_core = (c % 2 == 0);
    PlaneWitness core = construct_two_lines(w, d, even_core, rng);
    schemes::Divisor d1 = schemes::Divisor::from_line(*core.inter.L1);
    schemes::Divisor d2 = schemes::Divisor::from_line(*core.inter.L2);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::set<Vec> taken;
        std::vector<ProjPoint> e = general_points(rng, s - c, {d1, d2}, taken);
        Scheme a = schemes::scheme_union(core.A, e);
        if (schemes::h01(a, d).h1 != 0) continue;
        std::vector<ProjPoint> bset = core.B;
        bset.insert(bset.end(), e.begin(), e.end());
        if (!independent(bset, d)) continue;
        std::vector<Vec> gens{core.P.coords};
        for (const auto& row : veronese_rows(e, d)) gens.push_back(row);
        Vec coeffs(gens.size());
        coeffs[0] = 1;
        for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = rng.nonzero_coeff();
        Vec p = combine(gens, coeffs);
        if (!minimal_over(p, a, d)) continue;
        PlaneWitness w_out;
        w_out.A = std::move(a);
        w_out.B = std::move(bset);
        w_out.P = ProjPoint(n2, std::move(p));
        w_out.inter = core.inter;
        w_out.inter.E = std::move(e);
        w_out.inter.core_point = core.P;
        if (w_out.B.size() != r) throw ConstructionError("top-odd band: |B| != r");
        return w_out;
    }
    throw ConstructionError("top-odd band construction: retry budget exhausted");
}

}  // namespace detail

/// Constructs a witness for any admissible (m, s, d, r); deterministic for
/// a fixed seed. For m > 2 the plane configuration is embedded and every
/// span condition is re-verified in the larger ambient space.
inline Witness witness(unsigned m, unsigned s, unsigned d, unsigned r, std::uint64_t seed) {
    Band band = admissible(m, s, d, r);
    if (band.tag == BandTag::inadmissible)
        throw InadmissibleError("witness: (s, r) pair is inadmissible for this d");
    Sampler rng(seed);
    detail::PlaneWitness pw;
    switch (band.tag) {
        case BandTag::equal_rank: pw = detail::construct_equal(s, d, rng); break;
        case BandTag::middle: pw = detail::construct_middle(s, d, r, band.b, rng); break;
        case BandTag::top_even: pw = detail::construct_top_even(s, d, r, band.b, rng); break;
        case BandTag::top_odd_even_core:
        case BandTag::top_odd_odd_core:
            pw = detail::construct_top_odd(s, d, r, band.c, band.w, rng);
            break;
        default: throw InadmissibleError("witness: unreachable band");
    }
    Witness w;
    w.m = m;
    w.d = d;
    w.s = s;
    w.r = r;
    w.band = band;
    w.seed = seed;
    w.A2 = pw.A;
    w.B2 = pw.B;
    w.P2 = pw.P;
    w.inter = std::move(pw.inter);
    if (m == 2) {
        w.A = w.A2;
        w.B = w.B2;
        w.P = w.P2;
    } else {
        w.A.m = m;
        for (const auto& comp : w.A2.components)
            w.A.components.push_back(
                {geom::embed_curve(comp.carrier, m), comp.t0, comp.k});
        for (const auto& p : w.B2) w.B.push_back(geom::embed_point(p, m));
        w.P = ProjPoint(static_cast<unsigned>(geom::ambient_dim(m, d)),
                        embed_veronese_vec(w.P2.coords, m, d));
        // re-verify all span conditions in the big ambient space
        if (!exact::in_span(w.P.coords, schemes::span_image(w.A, d)))
            throw ConstructionError("embedding: P left the span of nu_d(A)");
        if (!exact::in_span(w.P.coords,
                            exact::span_of(detail::veronese_rows(w.B, d),
                                           geom::ambient_dim(m, d) + 1)))
            throw ConstructionError("embedding: P left the span of nu_d(B)");
        if (!detail::minimal_over(w.P.coords, w.A, d))
            throw ConstructionError("embedding: subscheme minimality failed upstairs");
    }
    if (w.A.degree() != s) throw ConstructionError("witness: deg(A) != s");
    if (w.B.size() != r) throw ConstructionError("witness: |B| != r");
    return w;
}

}  // namespace waring::strata
