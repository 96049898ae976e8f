#include "hncalc/exact_series.hpp"

#include <utility>

namespace hncalc {

Integer binomial(long a, long b)
{
    if (b < 0 || a < b)
        return 0;
    // Here a >= b >= 0.
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(),
                 static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return result;
}

IntPoly::IntPoly(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly IntPoly::one()
{
    return IntPoly{{Integer(1)}};
}

const Integer& IntPoly::coeff(long j) const
{
    static const Integer zero = 0;
    if (j < 0 || j >= static_cast<long>(coeffs_.size()))
        return zero;
    return coeffs_[static_cast<std::size_t>(j)];
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q)
{
    if (p.is_zero() || q.is_zero())
        return IntPoly::zero();

    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return IntPoly{std::move(out)};
}

IntPoly all_ones_poly(long d)
{
    if (d < 1)
        throw DomainError("all_ones_poly: d must be >= 1");
    return IntPoly{std::vector<Integer>(static_cast<std::size_t>(d), Integer(1))};
}

} // namespace hncalc
