#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/linalg.hpp"
#include "waring/poly.hpp"
#include "waring/rational.hpp"

namespace waring::geom {

using exact::Matrix;
using exact::Poly;
using exact::Rational;
using exact::SubspaceBasis;
using exact::Vec;

inline unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    if (!b.fits_ulong_p()) throw std::overflow_error("binomial overflow");
    return b.get_ui();
}

/// Dimension of the target projective space of the degree-d Veronese of P^m.
inline std::size_t ambient_dim(unsigned m, unsigned d) {
    if (m < 1 || d < 1) throw std::invalid_argument("ambient_dim: need m >= 1, d >= 1");
    return static_cast<std::size_t>(binomial(m + d, m)) - 1;
}

/// Point of P^m, stored normalized: first nonzero coordinate equals 1.
struct ProjPoint {
    unsigned m = 0;
    Vec coords;

    ProjPoint() = default;
    ProjPoint(unsigned m_, Vec c) : m(m_), coords(std::move(c)) {
        if (coords.size() != m + 1) throw std::invalid_argument("ProjPoint: bad coordinate count");
        normalize();
    }

    void normalize() {
        for (const auto& c : coords) {
            if (c != 0) {
                if (c != 1) {
                    Rational inv = 1 / c;
                    for (auto& x : coords) x *= inv;
                }
                return;
            }
        }
        throw std::invalid_argument("ProjPoint: all coordinates zero");
    }

    bool operator==(const ProjPoint& o) const = default;
    bool operator<(const ProjPoint& o) const { return coords < o.coords; }
};

inline ProjPoint plane_point(long x0, long x1, long x2) {
    return ProjPoint(2, Vec{Rational(x0), Rational(x1), Rational(x2)});
}

/// All degree-d exponent vectors in m+1 variables, graded lexicographic
/// (x0 > x1 > ... ). This order is frozen into the serialization format.
struct MonomialBasis {
    unsigned m = 0, d = 0;
    std::vector<std::vector<unsigned>> exps;
    std::map<std::vector<unsigned>, std::size_t> index;

    MonomialBasis(unsigned m_, unsigned d_) : m(m_), d(d_) {
        std::vector<unsigned> cur(m + 1, 0);
        gen(cur, 0, d);
        for (std::size_t i = 0; i < exps.size(); ++i) index[exps[i]] = i;
    }

    std::size_t size() const { return exps.size(); }

    std::size_t index_of(const std::vector<unsigned>& e) const {
        auto it = index.find(e);
        if (it == index.end()) throw std::invalid_argument("monomial not in basis");
        return it->second;
    }

  private:
    void gen(std::vector<unsigned>& cur, unsigned var, unsigned rem) {
        if (var == m) {
            cur[var] = rem;
            exps.push_back(cur);
            return;
        }
        for (unsigned e = rem + 1; e-- > 0;) {
            cur[var] = e;
            gen(cur, var + 1, rem - e);
        }
        cur[var] = 0;
    }
};

inline const MonomialBasis& monomial_basis(unsigned m, unsigned d) {
    static std::map<std::pair<unsigned, unsigned>, MonomialBasis> cache;
    auto key = std::make_pair(m, d);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, MonomialBasis(m, d)).first;
    return it->second;
}

inline Rational eval_monomial(const Vec& coords, const std::vector<unsigned>& exp) {
    Rational r(1);
    for (std::size_t i = 0; i < exp.size(); ++i)
        for (unsigned k = 0; k < exp[i]; ++k) r *= coords[i];
    return r;
}

/// Raw (unnormalized) Veronese coordinate vector of p.
inline Vec veronese_vec(const ProjPoint& p, unsigned d) {
    const auto& basis = monomial_basis(p.m, d);
    Vec out;
    out.reserve(basis.size());
    for (const auto& e : basis.exps) out.push_back(eval_monomial(p.coords, e));
    return out;
}

/// The degree-d Veronese embedding.
inline ProjPoint veronese(const ProjPoint& p, unsigned d) {
    return ProjPoint(static_cast<unsigned>(ambient_dim(p.m, d)), veronese_vec(p, d));
}

enum class CurveKind { line, smooth_conic };

/// A line or smooth conic given by a rational parametrization gamma(t).
/// Lines keep their two defining points (gamma(t) = p + t*q).
struct ParamCurve {
    CurveKind kind = CurveKind::line;
    unsigned m = 0;
    std::vector<Poly> param;  // m+1 coordinate polynomials, degree <= kind degree
    std::optional<std::pair<ProjPoint, ProjPoint>> line_points;

    unsigned degree() const { return kind == CurveKind::line ? 1u : 2u; }

    ProjPoint point_at(const Rational& t) const {
        Vec c;
        c.reserve(m + 1);
        for (const auto& p : param) c.push_back(exact::poly_eval(p, t));
        return ProjPoint(m, std::move(c));
    }

    bool operator==(const ParamCurve& o) const {
        return kind == o.kind && m == o.m && o.param == param;
    }
};

inline ParamCurve line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p.m != q.m) throw std::invalid_argument("line_through: mixed ambient spaces");
    if (p == q) throw std::invalid_argument("line_through: points coincide");
    ParamCurve c;
    c.kind = CurveKind::line;
    c.m = p.m;
    c.param.resize(p.m + 1);
    for (std::size_t i = 0; i <= p.m; ++i) c.param[i] = Poly{p.coords[i], q.coords[i]};
    c.line_points = {p, q};
    return c;
}

/// The conic [1 : t : t^2] in the plane x3 = ... = xm = 0 of P^m.
inline ParamCurve standard_conic(unsigned m = 2) {
    ParamCurve c;
    c.kind = CurveKind::smooth_conic;
    c.m = m;
    c.param.assign(m + 1, Poly{});
    c.param[0] = Poly{Rational(1)};
    c.param[1] = Poly{Rational(0), Rational(1)};
    c.param[2] = Poly{Rational(0), Rational(0), Rational(1)};
    return c;
}

/// nu_d composed with the parametrization: one coordinate polynomial per
/// monomial, each of degree <= e*d where e is the curve degree.
inline std::vector<Poly> compose_curve(const ParamCurve& c, unsigned d) {
    const auto& basis = monomial_basis(c.m, d);
    std::vector<Poly> out;
    out.reserve(basis.size());
    for (const auto& e : basis.exps) {
        Poly p{Rational(1)};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) p = exact::poly_mul(p, exact::poly_pow(c.param[i], e[i]));
        p.resize(static_cast<std::size_t>(c.degree()) * d + 1, Rational(0));
        out.push_back(std::move(p));
    }
    return out;
}

/// Coefficient matrix of compose_curve: row j holds the coefficients of t^j
/// across all Veronese coordinates. Points of nu_d(C) are the evaluations,
/// so the row space is exactly the span of the embedded curve.
inline Matrix curve_coeff_matrix(const ParamCurve& c, unsigned d) {
    auto polys = compose_curve(c, d);
    std::size_t rows = static_cast<std::size_t>(c.degree()) * d + 1;
    Matrix m(rows, polys.size());
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = polys[j][i];
    return m;
}

inline SubspaceBasis curve_span(const ParamCurve& c, unsigned d) {
    return exact::row_space(curve_coeff_matrix(c, d));
}

/// Normalized defining form of a plane curve: 3 coefficients for a line,
/// 6 (in MonomialBasis(2,2) order) for a conic. First nonzero coeff = 1.
inline Vec normalize_form(Vec f) {
    for (const auto& c : f) {
        if (c != 0) {
            if (c != 1) {
                Rational inv = 1 / c;
                for (auto& x : f) x *= inv;
            }
            return f;
        }
    }
    throw std::invalid_argument("normalize_form: zero form");
}

inline Vec line_form(const ParamCurve& line) {
    if (line.kind != CurveKind::line || line.m != 2)
        throw std::invalid_argument("line_form: need a plane line");
    ProjPoint p = line.point_at(Rational(0));
    ProjPoint q = line.point_at(Rational(1));
    if (p == q) q = line.point_at(Rational(2));
    const Vec& a = p.coords;
    const Vec& b = q.coords;
    Vec f{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    return normalize_form(std::move(f));
}

inline Rational eval_form(const Vec& form, const ProjPoint& p, unsigned form_degree) {
    const auto& basis = monomial_basis(2, form_degree);
    if (form.size() != basis.size()) throw std::invalid_argument("eval_form: size mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < form.size(); ++i)
        if (form[i] != 0) acc += form[i] * eval_monomial(p.coords, basis.exps[i]);
    return acc;
}

/// Pullback of a plane form of the given degree along a parametrized curve.
inline Poly compose_form(const Vec& form, unsigned form_degree, const ParamCurve& c) {
    if (c.m != 2) throw std::invalid_argument("compose_form: need a plane curve");
    const auto& basis = monomial_basis(2, form_degree);
    Poly acc{};
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) continue;
        Poly p{Rational(1)};
        for (std::size_t v = 0; v < 3; ++v)
            if (basis.exps[i][v] > 0) p = exact::poly_mul(p, exact::poly_pow(c.param[v], basis.exps[i][v]));
        acc = exact::poly_add(acc, exact::poly_scale(p, form[i]));
    }
    return acc;
}

/// Defining quadratic form of a parametrized smooth plane conic, recovered
/// from evaluations at 5 parameter values.
inline Vec conic_form(const ParamCurve& conic) {
    if (conic.kind != CurveKind::smooth_conic || conic.m != 2)
        throw std::invalid_argument("conic_form: need a plane conic");
    const auto& basis = monomial_basis(2, 2);
    Matrix m(5, 6);
    for (long t = 0; t < 5; ++t) {
        ProjPoint p = conic.point_at(Rational(t));
        for (std::size_t j = 0; j < 6; ++j) m.at(t, j) = eval_monomial(p.coords, basis.exps[j]);
    }
    SubspaceBasis k = exact::kernel(m);
    if (k.dim() != 1) throw std::logic_error("conic_form: parametrization is degenerate");
    return normalize_form(k.vectors[0]);
}

/// Whether a plane quadratic form factors into two linear forms: the
/// associated symmetric 3x3 matrix is singular.
inline bool quadratic_form_degenerate(const Vec& q) {
    // q in MonomialBasis(2,2) order: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2
    Rational a = q[0], b = q[1] / 2, c = q[2] / 2, e = q[3], f = q[4] / 2, g = q[5];
    Rational det = a * (e * g - f * f) - b * (b * g - f * c) + c * (b * f - e * c);
    return det == 0;
}

struct ConicThrough {
    std::size_t kernel_dim = 0;
    bool unique = false;
    bool degenerate = true;
    Vec form;  // valid when unique
};

/// The pencil (or net) of conics through 5 plane points.
inline ConicThrough conic_through(const std::vector<ProjPoint>& pts) {
    if (pts.size() != 5) throw std::invalid_argument("conic_through: need 5 points");
    const auto& basis = monomial_basis(2, 2);
    Matrix m(5, 6);
    for (std::size_t i = 0; i < 5; ++i) {
        if (pts[i].m != 2) throw std::invalid_argument("conic_through: need plane points");
        for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = eval_monomial(pts[i].coords, basis.exps[j]);
    }
    SubspaceBasis k = exact::kernel(m);
    ConicThrough out;
    out.kernel_dim = k.dim();
    out.unique = (k.dim() == 1);
    if (out.unique) {
        out.form = normalize_form(k.vectors[0]);
        out.degenerate = quadratic_form_degenerate(out.form);
    }
    return out;
}

/// Two distinct plane lines meeting in one point.
struct ReducibleConic {
    ParamCurve l1, l2;
    ProjPoint meeting_point() const {
        Vec f1 = line_form(l1), f2 = line_form(l2);
        Vec p{f1[1] * f2[2] - f1[2] * f2[1], f1[2] * f2[0] - f1[0] * f2[2],
              f1[0] * f2[1] - f1[1] * f2[0]};
        return ProjPoint(2, std::move(p));
    }
};

/// Embeds a plane point into P^m (coordinates x3..xm = 0).
inline ProjPoint embed_point(const ProjPoint& p, unsigned m) {
    if (p.m > m) throw std::invalid_argument("embed_point: target too small");
    Vec c = p.coords;
    c.resize(m + 1, Rational(0));
    return ProjPoint(m, std::move(c));
}

/// Embeds a plane curve into P^m by padding the parametrization with zeros.
inline ParamCurve embed_curve(const ParamCurve& c, unsigned m) {
    if (c.m > m) throw std::invalid_argument("embed_curve: target too small");
    ParamCurve out = c;
    out.m = m;
    out.param.resize(m + 1, Poly{});
    if (out.line_points)
        out.line_points = {embed_point(out.line_points->first, m),
                           embed_point(out.line_points->second, m)};
    return out;
}

}  // namespace waring::geom
