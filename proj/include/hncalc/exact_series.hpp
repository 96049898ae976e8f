#ifndef HNCALC_EXACT_SERIES_HPP
#define HNCALC_EXACT_SERIES_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "hncalc/errors.hpp"

namespace hncalc {

// Exact unbounded integers / rationals. No floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

// gmpxx lacks a long long constructor; go through long when it is wide
// enough and through the decimal string otherwise.
inline Integer to_integer(long long v) {
    if constexpr (sizeof(long) >= sizeof(long long)) {
        return Integer(static_cast<long>(v));
    } else {
        return Integer(std::to_string(v));
    }
}

// Binomial coefficient C(a, b), extended by the vanishing convention:
// returns 0 whenever b < 0 or a < b (so also for every negative a).
Integer binomial(long a, long b);

// Dense univariate polynomial with exact integer coefficients, coefficient of
// t^j at index j. Trailing zeros are trimmed; the zero polynomial has an
// empty coefficient vector. Immutable after construction.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one();

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Coefficient of t^j; 0 outside the stored range.
    const Integer& coeff(long j) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly&) const = default;

private:
    std::vector<Integer> coeffs_;
};

// Exact convolution; deg(p*q) = deg p + deg q (for nonzero factors).
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return poly_mul(p, q); }

// 1 + t + ... + t^{d-1}. Requires d >= 1.
IntPoly all_ones_poly(long d);

} // namespace hncalc

#endif
