#pragma once

#include <cstddef>
#include <vector>

#include "waring/rational.hpp"

namespace waring::exact {

/// Univariate polynomial over Q, coeffs[i] is the coefficient of t^i.
/// Trailing zeros are allowed; use poly_trim for a canonical form.
using Poly = std::vector<Rational>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline bool poly_is_zero(const Poly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

inline long poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}

inline Rational poly_eval(const Poly& p, const Rational& t) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Poly poly_scale(const Poly& a, const Rational& c) {
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline Poly poly_pow(const Poly& a, unsigned e) {
    Poly r{Rational(1)};
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

inline Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * p[i];
    return r;
}

/// Order of vanishing of p at t0 (multiplicity of the root); SIZE_MAX-like
/// sentinel is not used: the zero polynomial returns a large order.
inline unsigned vanishing_order(Poly p, const Rational& t0, unsigned cap = 1u << 20) {
    p = poly_trim(p);
    if (p.empty()) return cap;
    unsigned mu = 0;
    while (poly_eval(p, t0) == 0) {
        // synthetic division by (t - t0)
        Poly q(p.size() - 1, Rational(0));
        Rational carry(0);
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * t0;
            q[i - 1] = carry;
        }
        p = poly_trim(std::move(q));
        ++mu;
        if (p.empty() || mu >= cap) break;
    }
    return mu;
}

inline Poly poly_monic(Poly p) {
    p = poly_trim(std::move(p));
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline Poly poly_mod(Poly a, const Poly& b) {
    a = poly_trim(std::move(a));
    Poly bb = poly_trim(b);
    while (a.size() >= bb.size() && !a.empty()) {
        Rational f = a.back() / bb.back();
        std::size_t shift = a.size() - bb.size();
        for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
        a = poly_trim(std::move(a));
    }
    return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

inline bool poly_squarefree(const Poly& p) {
    Poly q = poly_trim(p);
    if (q.size() <= 1) return true;  // constants and zero
    return poly_gcd(q, poly_derivative(q)).size() == 1;
}

}  // namespace waring::exact
