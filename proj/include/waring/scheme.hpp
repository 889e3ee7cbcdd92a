#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/geom.hpp"
#include "waring/linalg.hpp"

namespace waring::schemes {

using exact::Matrix;
using exact::Poly;
using exact::Rational;
using exact::SubspaceBasis;
using exact::Vec;
using geom::ParamCurve;
using geom::ProjPoint;

/// One connected curvilinear component: the divisor k * gamma(t0) on its
/// carrier line or smooth conic.
struct CurvComponent {
    ParamCurve carrier;
    Rational t0;
    unsigned k = 1;

    ProjPoint support() const { return carrier.point_at(t0); }
};

/// A curvilinear zero-dimensional scheme: components on lines/conics,
/// reduced points being components with k = 1. Supports must be distinct.
struct Scheme {
    unsigned m = 2;
    std::vector<CurvComponent> components;

    unsigned degree() const {
        unsigned s = 0;
        for (const auto& c : components) s += c.k;
        return s;
    }

    std::vector<ProjPoint> supports() const {
        std::vector<ProjPoint> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(c.support());
        return out;
    }

    void check_supports_distinct() const {
        auto s = supports();
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("Scheme: components share a support point");
    }
};

inline Scheme scheme_of_points(const std::vector<ProjPoint>& pts, unsigned m) {
    Scheme z;
    z.m = m;
    for (const auto& p : pts) {
        // any line through p works as a carrier for a reduced point
        Vec dir = p.coords;
        dir[0] += 1;
        ProjPoint q = (ProjPoint(m, dir) == p) ? ProjPoint(m, [&] {
            Vec d2 = p.coords;
            d2[1] += 1;
            return d2;
        }()) : ProjPoint(m, dir);
        z.components.push_back({geom::line_through(p, q), Rational(0), 1});
    }
    return z;
}

/// One row per jet functional: for each component, the derivatives
/// (d^j/dt^j) nu_d(gamma(t)) at t0 for j = 0..k-1. Row count = deg(Z).
inline Matrix conditions_matrix(const Scheme& z, unsigned d) {
    std::size_t n = geom::ambient_dim(z.m, d) + 1;
    std::vector<Vec> rows;
    rows.reserve(z.degree());
    for (const auto& comp : z.components) {
        std::vector<Poly> polys = geom::compose_curve(comp.carrier, d);
        for (unsigned j = 0; j < comp.k; ++j) {
            Vec row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = exact::poly_eval(polys[i], comp.t0);
            rows.push_back(std::move(row));
            if (j + 1 < comp.k)
                for (auto& p : polys) p = exact::poly_derivative(p);
        }
    }
    if (rows.empty()) return Matrix(0, n);
    return Matrix::from_rows(rows);
}

struct HFunction {
    unsigned d = 0;
    unsigned h0 = 0;
    unsigned h1 = 0;
    unsigned conditions_rank = 0;
};

/// h^0 and h^1 of the twisted ideal sheaf of Z, via the rank of the
/// conditions matrix.
inline HFunction h01(const Scheme& z, unsigned d) {
    HFunction h;
    h.d = d;
    h.conditions_rank = static_cast<unsigned>(exact::rank(conditions_matrix(z, d)));
    h.h0 = static_cast<unsigned>(geom::binomial(z.m + d, z.m)) - h.conditions_rank;
    h.h1 = z.degree() - h.conditions_rank;
    return h;
}

/// Span of nu_d(Z): the row space of the conditions matrix.
inline SubspaceBasis span_image(const Scheme& z, unsigned d) {
    if (z.components.empty())
        return SubspaceBasis{geom::ambient_dim(z.m, d) + 1, {}};
    return exact::row_space(conditions_matrix(z, d));
}

/// All subschemes: every choice of degree 0..k_i per component.
/// Count is exactly the product of (k_i + 1).
inline std::vector<Scheme> subschemes(const Scheme& z) {
    std::vector<Scheme> out;
    std::vector<unsigned> choice(z.components.size(), 0);
    while (true) {
        Scheme s;
        s.m = z.m;
        for (std::size_t i = 0; i < choice.size(); ++i)
            if (choice[i] > 0) {
                CurvComponent c = z.components[i];
                c.k = choice[i];
                s.components.push_back(std::move(c));
            }
        out.push_back(std::move(s));
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (choice[i] < z.components[i].k) {
                ++choice[i];
                break;
            }
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    return out;
}

/// A plane divisor given as a product of linear/quadratic forms: a line,
/// a smooth conic, or a reducible conic (two lines).
struct Divisor {
    struct Factor {
        Vec form;         // 3 coeffs (degree 1) or 6 coeffs (degree 2)
        unsigned degree;  // 1 or 2
    };
    std::vector<Factor> factors;
    std::string desc;

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& f : factors) d += f.degree;
        return d;
    }

    static Divisor from_line(const ParamCurve& l, std::string desc = "line") {
        return Divisor{{{geom::line_form(l), 1}}, std::move(desc)};
    }
    static Divisor from_line_form(Vec f, std::string desc = "line") {
        return Divisor{{{geom::normalize_form(std::move(f)), 1}}, std::move(desc)};
    }
    static Divisor from_conic(const ParamCurve& c, std::string desc = "conic") {
        return Divisor{{{geom::conic_form(c), 2}}, std::move(desc)};
    }
    static Divisor from_quadratic(Vec q, std::string desc = "conic") {
        return Divisor{{{geom::normalize_form(std::move(q)), 2}}, std::move(desc)};
    }
    static Divisor from_two_lines(const ParamCurve& l1, const ParamCurve& l2,
                                  std::string desc = "reducible conic") {
        return Divisor{{{geom::line_form(l1), 1}, {geom::line_form(l2), 1}}, std::move(desc)};
    }

    bool contains_point(const ProjPoint& p) const {
        for (const auto& f : factors)
            if (geom::eval_form(f.form, p, f.degree) == 0) return true;
        return false;
    }
};

/// Residual scheme Res_D(Z). Per component: removed when D contains the
/// carrier; otherwise the degree drops by the order of vanishing at t0 of
/// the defining form pulled back to the carrier.
inline Scheme residual(const Scheme& z, const Divisor& dv) {
    Scheme out;
    out.m = z.m;
    for (const auto& comp : z.components) {
        unsigned mu = 0;
        bool contained = false;
        for (const auto& f : dv.factors) {
            Poly pb = geom::compose_form(f.form, f.degree, comp.carrier);
            if (exact::poly_is_zero(pb)) {
                contained = true;
                break;
            }
            mu += exact::vanishing_order(pb, comp.t0);
        }
        if (contained || mu >= comp.k) continue;
        CurvComponent c = comp;
        c.k = comp.k - mu;
        out.components.push_back(std::move(c));
    }
    return out;
}

/// deg(Z cap D) via the bookkeeping identity deg(Z) = deg(Res_D Z) + deg(Z cap D).
inline unsigned deg_intersect(const Scheme& z, const Divisor& dv) {
    return z.degree() - residual(z, dv).degree();
}

/// The scheme-theoretic intersection Z cap D (a subscheme of Z).
inline Scheme scheme_meet(const Scheme& z, const Divisor& dv) {
    Scheme out;
    out.m = z.m;
    for (const auto& comp : z.components) {
        unsigned mu = 0;
        bool contained = false;
        for (const auto& f : dv.factors) {
            Poly pb = geom::compose_form(f.form, f.degree, comp.carrier);
            if (exact::poly_is_zero(pb)) {
                contained = true;
                break;
            }
            mu += exact::vanishing_order(pb, comp.t0);
        }
        unsigned kk = contained ? comp.k : std::min(comp.k, mu);
        if (kk == 0) continue;
        CurvComponent c = comp;
        c.k = kk;
        out.components.push_back(std::move(c));
    }
    return out;
}

/// Union of a scheme with a set of reduced points. Points landing on an
/// existing support are absorbed by that component.
inline Scheme scheme_union(const Scheme& z, const std::vector<ProjPoint>& pts) {
    Scheme out = z;
    auto sup = z.supports();
    std::set<Vec> seen;
    for (const auto& p : sup) seen.insert(p.coords);
    for (const auto& p : pts) {
        if (seen.count(p.coords)) continue;
        seen.insert(p.coords);
        Scheme one = scheme_of_points({p}, z.m);
        out.components.push_back(one.components[0]);
    }
    return out;
}

struct ExcessCurve {
    enum class Kind { line, conic } kind;
    Divisor divisor;
    unsigned deg_meet = 0;
};

namespace detail {

inline std::vector<Vec> candidate_line_forms(const Scheme& z) {
    std::vector<Vec> lines;
    std::set<Vec> seen;
    auto push = [&](Vec f) {
        f = geom::normalize_form(std::move(f));
        if (seen.insert(f).second) lines.push_back(std::move(f));
    };
    for (const auto& comp : z.components)
        if (comp.carrier.kind == geom::CurveKind::line) push(geom::line_form(comp.carrier));
    auto sup = z.supports();
    for (std::size_t i = 0; i < sup.size(); ++i)
        for (std::size_t j = i + 1; j < sup.size(); ++j)
            if (!(sup[i] == sup[j])) push(geom::line_form(geom::line_through(sup[i], sup[j])));
    return lines;
}

/// Bezout-type bound on deg(T cap Z) for a smooth conic T that is not a
/// carrier: each carrier line contributes at most 2, each carrier conic at
/// most 4 (and never more than the total degree it carries).
inline unsigned smooth_conic_cap(const Scheme& z) {
    std::map<std::pair<int, Vec>, unsigned> carrier_deg;
    for (const auto& comp : z.components) {
        Vec f = comp.carrier.kind == geom::CurveKind::line ? geom::line_form(comp.carrier)
                                                           : geom::conic_form(comp.carrier);
        int kindtag = comp.carrier.kind == geom::CurveKind::line ? 0 : 1;
        carrier_deg[{kindtag, f}] += comp.k;
    }
    unsigned cap = 0;
    for (const auto& [key, deg] : carrier_deg)
        cap += std::min(deg, key.first == 0 ? 2u : 4u);
    return cap;
}

}  // namespace detail

/// Searches for a line L with deg(L cap Z) >= d+2 or a conic T with
/// deg(T cap Z) >= 2d+2, over a deterministic candidate list: carrier
/// lines, lines through support pairs, carrier conics, reducible pairs of
/// candidate lines, and conics through 5-subsets of the support points.
/// Preconditions: plane scheme, deg(Z) < 3d.
inline std::optional<ExcessCurve> excess_curve_detect(const Scheme& z, unsigned d) {
    if (z.m != 2) throw std::invalid_argument("excess_curve_detect: plane schemes only");
    if (z.degree() >= 3 * d) throw std::invalid_argument("excess_curve_detect: need deg(Z) < 3d");
    auto line_forms = detail::candidate_line_forms(z);
    std::vector<unsigned> line_deg(line_forms.size());
    for (std::size_t i = 0; i < line_forms.size(); ++i) {
        Divisor dv = Divisor::from_line_form(line_forms[i]);
        line_deg[i] = deg_intersect(z, dv);
        if (line_deg[i] >= d + 2)
            return ExcessCurve{ExcessCurve::Kind::line, std::move(dv), line_deg[i]};
    }

    // carrier conics
    std::set<Vec> seen_conics;
    for (const auto& comp : z.components) {
        if (comp.carrier.kind != geom::CurveKind::smooth_conic) continue;
        Vec f = geom::conic_form(comp.carrier);
        if (!seen_conics.insert(f).second) continue;
        Divisor dv = Divisor::from_quadratic(f, "carrier conic");
        unsigned deg = deg_intersect(z, dv);
        if (deg >= 2 * d + 2) return ExcessCurve{ExcessCurve::Kind::conic, std::move(dv), deg};
    }

    // reducible conics: pairs of candidate lines (repeats allowed, so double
    // lines are covered); at least one line of an excess pair meets Z in
    // degree >= d+1, which prunes the pair set sharply
    for (std::size_t i = 0; i < line_forms.size(); ++i) {
        if (line_deg[i] < d + 1) continue;
        for (std::size_t j = 0; j < line_forms.size(); ++j) {
            if (line_deg[i] + line_deg[j] < 2 * d + 2) continue;
            Divisor dv{{{line_forms[i], 1}, {line_forms[j], 1}}, "reducible conic"};
            unsigned deg = deg_intersect(z, dv);
            if (deg >= 2 * d + 2) return ExcessCurve{ExcessCurve::Kind::conic, std::move(dv), deg};
        }
    }

    // smooth conics through 5-subsets of supports; skipped whenever the
    // Bezout cap already rules a non-carrier conic out
    if (detail::smooth_conic_cap(z) >= 2 * d + 2) {
        auto sup = z.supports();
        std::sort(sup.begin(), sup.end());
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        std::size_t n = sup.size();
        if (n >= 5) {
            std::vector<std::size_t> idx{0, 1, 2, 3, 4};
            while (true) {
                std::vector<ProjPoint> pts;
                for (auto i : idx) pts.push_back(sup[i]);
                geom::ConicThrough ct = geom::conic_through(pts);
                if (ct.unique && !ct.degenerate && !seen_conics.count(ct.form)) {
                    seen_conics.insert(ct.form);
                    Divisor dv = Divisor::from_quadratic(ct.form, "conic through supports");
                    unsigned deg = deg_intersect(z, dv);
                    if (deg >= 2 * d + 2)
                        return ExcessCurve{ExcessCurve::Kind::conic, std::move(dv), deg};
                }
                // next 5-subset, lexicographic
                long p = 4;
                while (p >= 0 && idx[static_cast<std::size_t>(p)] ==
                                     n - 5 + static_cast<std::size_t>(p))
                    --p;
                if (p < 0) break;
                ++idx[static_cast<std::size_t>(p)];
                for (std::size_t q = static_cast<std::size_t>(p) + 1; q < 5; ++q)
                    idx[q] = idx[q - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace waring::schemes
