#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "waring/geom.hpp"
#include "waring/linalg.hpp"
#include "waring/poly.hpp"

namespace waring::sylvester {

using exact::Matrix;
using exact::Poly;
using exact::Rational;
using exact::Vec;

/// Binary form of degree e in the binomial-weighted basis:
///   f = sum_i C(e,i) * a[i] * x^(e-i) y^i.
/// In this convention the power (x + t y)^e has coordinates a[i] = t^i, and
/// the contraction (catalecticant) matrices are plain coefficient shifts.
struct BinForm {
    unsigned e = 0;
    Vec a;  // e+1 coefficients

    BinForm() = default;
    BinForm(unsigned e_, Vec a_) : e(e_), a(std::move(a_)) {
        if (a.size() != e + 1) throw std::invalid_argument("BinForm: bad coefficient count");
        bool all_zero = true;
        for (const auto& c : a)
            if (c != 0) all_zero = false;
        if (all_zero) throw std::invalid_argument("BinForm: zero form");
    }
};

/// The (e-k+1) x (k+1) Hankel matrix of the contraction from degree-k dual
/// forms to degree-(e-k) forms: H[i][j] = a[i+j].
inline Matrix hankel(const BinForm& f, unsigned k) {
    if (k > f.e) throw std::invalid_argument("hankel: k out of range");
    Matrix m(f.e - k + 1, k + 1);
    for (std::size_t i = 0; i + k <= f.e; ++i)
        for (std::size_t j = 0; j <= k; ++j) m.at(i, j) = f.a[i + j];
    return m;
}

/// Border rank of a binary form: the rank of the most-square catalecticant.
inline unsigned border_rank_binary(const BinForm& f) {
    return static_cast<unsigned>(exact::rank(hankel(f, f.e / 2)));
}

struct RankResult {
    unsigned e = 0;
    unsigned rank = 0;
    unsigned border_rank = 0;
    Vec g;  // apolar binary form of degree border_rank, as g(x,y) = sum g[j] x^(r-j) y^j
    bool squarefree = false;
    bool kernel_unique = true;
};

namespace detail {

/// Squarefreeness of the homogeneous binary form with coefficient vector g
/// of degree r: the dehomogenization u(t) = sum g[j] t^j must be squarefree
/// and the root at infinity (multiplicity r - deg u) at most simple.
inline bool homogeneous_squarefree(const Vec& g, unsigned r) {
    Poly u = exact::poly_trim(g);
    if (u.empty()) throw std::invalid_argument("homogeneous_squarefree: zero form");
    long deg = exact::poly_degree(u);
    if (static_cast<long>(r) - deg > 1) return false;
    return exact::poly_squarefree(u);
}

}  // namespace detail

/// Sylvester's algorithm: border rank r from the catalecticant, the apolar
/// form g spanning the kernel at order r, and the rank r (g squarefree) or
/// e - r + 2 (otherwise).
inline RankResult rank_binary(const BinForm& f) {
    RankResult out;
    out.e = f.e;
    out.border_rank = border_rank_binary(f);
    unsigned r = out.border_rank;
    exact::SubspaceBasis ker = exact::kernel(hankel(f, r));
    if (ker.dim() == 0) throw std::logic_error("rank_binary: empty kernel at the border rank");
    out.kernel_unique = (ker.dim() == 1);
    if (out.kernel_unique) {
        out.g = ker.vectors[0];
        out.squarefree = detail::homogeneous_squarefree(out.g, r);
    } else {
        // Only reachable when 2r > e+1 (generic even-degree forms): some
        // pencil member is squarefree; scan small combinations.
        for (long c = 0; c <= 8 && !out.squarefree; ++c) {
            Vec g = ker.vectors[0];
            for (std::size_t j = 0; j < g.size(); ++j) g[j] += Rational(c) * ker.vectors[1][j];
            if (detail::homogeneous_squarefree(g, r)) {
                out.g = g;
                out.squarefree = true;
            }
        }
        if (!out.squarefree) throw std::logic_error("rank_binary: no squarefree kernel member found");
    }
    out.rank = out.squarefree ? r : f.e - r + 2;
    return out;
}

/// Rank of a point of the span of nu_d(C) for a parametrized line or smooth
/// conic C, computed via Sylvester on the associated binary form of degree
/// (curve degree) * d. For a line this is also the rank with respect to the
/// full Veronese variety.
inline RankResult curve_point_rank(const geom::ProjPoint& p, const geom::ParamCurve& c,
                                   unsigned d) {
    Matrix coeff = geom::curve_coeff_matrix(c, d);
    std::vector<Vec> rows;
    rows.reserve(coeff.rows);
    for (std::size_t i = 0; i < coeff.rows; ++i) rows.push_back(coeff.row(i));
    auto sol = exact::solve_in_span(rows, p.coords);
    if (!sol) throw std::invalid_argument("curve_point_rank: point not in the span of the curve");
    return rank_binary(BinForm(c.degree() * d, *sol));
}

}  // namespace waring::sylvester
