#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace waring::exact {

/// Arbitrary-precision rational number. Always stored canonically:
/// gcd(|num|, den) = 1 and den > 0. Arithmetic is exact.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Serializes as "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

/// Bit length of the larger of numerator and denominator; used for pivot
/// selection in row reduction.
inline std::size_t bit_size(const Rational& q) {
    std::size_t n = mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    return n > d ? n : d;
}

}  // namespace waring::exact
