#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "waring/rational.hpp"

namespace waring::exact {

using Vec = std::vector<Rational>;

/// Dense exact matrix, row-major.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Rational(0)) {}

    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    Vec row(std::size_t i) const {
        return Vec(entries.begin() + static_cast<long>(i * cols),
                   entries.begin() + static_cast<long>((i + 1) * cols));
    }

    static Matrix from_rows(const std::vector<Vec>& rows_in) {
        Matrix m(rows_in.size(), rows_in.empty() ? 0 : rows_in.front().size());
        for (std::size_t i = 0; i < rows_in.size(); ++i) {
            if (rows_in[i].size() != m.cols)
                throw std::invalid_argument("ragged rows in Matrix::from_rows");
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    bool operator==(const Matrix& o) const = default;
};

/// Reduced row-echelon form together with the pivot columns, in order.
inline std::pair<Matrix, std::vector<std::size_t>> rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        // Pivot choice: the nonzero candidate of largest bit length.
        std::size_t best = m.rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            std::size_t b = bit_size(m.at(i, c));
            if (best == m.rows || b > best_bits) {
                best = i;
                best_bits = b;
            }
        }
        if (best == m.rows) continue;
        if (best != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(best, j));
        Rational inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

/// A linear subspace of coordinate space, held as a reduced row-echelon basis.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<Vec> vectors;  // RREF rows, pivot columns strictly increasing

    std::size_t dim() const { return vectors.size(); }
    bool operator==(const SubspaceBasis& o) const = default;
};

/// Row space of a matrix as a SubspaceBasis.
inline SubspaceBasis row_space(const Matrix& m) {
    auto [red, piv] = rref(m);
    SubspaceBasis s;
    s.ambient_dim = m.cols;
    for (std::size_t i = 0; i < piv.size(); ++i) s.vectors.push_back(red.row(i));
    return s;
}

inline SubspaceBasis span_of(const std::vector<Vec>& vecs, std::size_t ambient) {
    if (vecs.empty()) return SubspaceBasis{ambient, {}};
    return row_space(Matrix::from_rows(vecs));
}

/// Basis of the right kernel {v : Mv = 0}.
inline SubspaceBasis kernel(const Matrix& m) {
    auto [red, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec> gens;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red.at(i, free);
        gens.push_back(std::move(v));
    }
    return span_of(gens, m.cols);
}

/// Coefficients of v in the RREF basis S, or nullopt when v is outside span(S).
inline std::optional<Vec> member(const Vec& v, const SubspaceBasis& s) {
    if (v.size() != s.ambient_dim) throw std::invalid_argument("member: dimension mismatch");
    Vec coeffs;
    coeffs.reserve(s.vectors.size());
    Vec rem = v;
    for (const auto& b : s.vectors) {
        // pivot column of b: first nonzero entry (equal to 1 in RREF)
        std::size_t p = 0;
        while (p < b.size() && b[p] == 0) ++p;
        Rational c = p < rem.size() ? rem[p] : Rational(0);
        coeffs.push_back(c);
        if (c != 0)
            for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= c * b[j];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return coeffs;
}

inline bool in_span(const Vec& v, const SubspaceBasis& s) { return member(v, s).has_value(); }

/// Solves sum_i c_i rows[i] = v; the coefficients refer to the given rows
/// (not to an echelonized basis). Requires the rows to be independent for
/// the coefficients to be unique; we only call it in that situation.
inline std::optional<Vec> solve_in_span(const std::vector<Vec>& rows, const Vec& v) {
    std::size_t n = v.size();
    std::size_t k = rows.size();
    Matrix aug(n, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("solve_in_span: dimension mismatch");
        for (std::size_t j = 0; j < n; ++j) aug.at(j, i) = rows[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) aug.at(j, k) = v[j];
    auto [red, piv] = rref(aug);
    for (auto c : piv)
        if (c == k) return std::nullopt;  // inconsistent
    Vec coeffs(k, Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) coeffs[piv[i]] = red.at(i, k);
    return coeffs;
}

/// Intersection of two subspaces of the same ambient space.
inline SubspaceBasis intersect(const SubspaceBasis& s1, const SubspaceBasis& s2) {
    if (s1.ambient_dim != s2.ambient_dim)
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    std::size_t k1 = s1.dim(), k2 = s2.dim();
    if (k1 == 0 || k2 == 0) return SubspaceBasis{s1.ambient_dim, {}};
    // Columns: basis of S1, then negated basis of S2. Kernel vectors (u, w)
    // satisfy u*S1 = w*S2, i.e. give points of the intersection.
    Matrix m(s1.ambient_dim, k1 + k2);
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < s1.ambient_dim; ++j) m.at(j, i) = s1.vectors[i][j];
    for (std::size_t i = 0; i < k2; ++i)
        for (std::size_t j = 0; j < s2.ambient_dim; ++j) m.at(j, k1 + i) = -s2.vectors[i][j];
    SubspaceBasis ker = kernel(m);
    std::vector<Vec> pts;
    for (const auto& kv : ker.vectors) {
        Vec x(s1.ambient_dim, Rational(0));
        for (std::size_t i = 0; i < k1; ++i)
            if (kv[i] != 0)
                for (std::size_t j = 0; j < s1.ambient_dim; ++j) x[j] += kv[i] * s1.vectors[i][j];
        pts.push_back(std::move(x));
    }
    return span_of(pts, s1.ambient_dim);
}

/// Sum of two subspaces.
inline SubspaceBasis join(const SubspaceBasis& s1, const SubspaceBasis& s2) {
    if (s1.ambient_dim != s2.ambient_dim)
        throw std::invalid_argument("join: ambient dimension mismatch");
    std::vector<Vec> all = s1.vectors;
    all.insert(all.end(), s2.vectors.begin(), s2.vectors.end());
    return span_of(all, s1.ambient_dim);
}

}  // namespace waring::exact
