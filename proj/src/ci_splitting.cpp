#include "hncalc/ci_splitting.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace hncalc {

void CompleteIntersectionSpec::validate() const
{
    if (degrees.empty())
        throw DomainError("complete intersection: at least one degree required");
    for (long long d : degrees)
        if (d < 1)
            throw DomainError("complete intersection: degrees must be >= 1");
    if (n - codimension() < 1)
        throw DomainError("complete intersection: n - r must be >= 1 "
                          "(projection target would not be positive-dimensional)");
}

HilbertTable::HilbertTable(const CompleteIntersectionSpec& spec, long j_max)
    : j_max_(j_max)
{
    spec.validate();
    if (j_max < 0)
        throw DomainError("HilbertTable: j_max must be >= 0");

    const int r = spec.codimension();
    const std::size_t width = static_cast<std::size_t>(j_max) + 1;
    rows_.assign(static_cast<std::size_t>(r) + 1, std::vector<Integer>(width));

    for (long j = 0; j <= j_max; ++j)
        rows_[0][static_cast<std::size_t>(j)] = binomial(spec.n + j, spec.n);
    for (int i = 1; i <= r; ++i) {
        const long long d = spec.degrees[static_cast<std::size_t>(i) - 1];
        for (long j = 0; j <= j_max; ++j) {
            Integer v = rows_[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
            if (j - d >= 0)
                v -= rows_[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j - d)];
            rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
        }
    }
}

const Integer& HilbertTable::h(int i, long j) const
{
    static const Integer zero = 0;
    if (i < 0 || i >= static_cast<int>(rows_.size()))
        throw DomainError("HilbertTable: level index out of range");
    if (j < 0)
        return zero;
    if (j > j_max_)
        throw DomainError("HilbertTable: twist beyond table bound");
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Integer hilbert_function(const CompleteIntersectionSpec& spec, int i, long j)
{
    spec.validate();
    if (i < 0 || i > spec.codimension())
        throw DomainError("hilbert_function: level index out of range");
    if (j < 0)
        return 0;
    return HilbertTable(spec, j).h(i, j);
}

Integer hilbert_oracle(const CompleteIntersectionSpec& spec, long j)
{
    spec.validate();
    const int r = spec.codimension();
    if (r >= 63)
        throw DomainError("hilbert_oracle: codimension too large for subset enumeration");

    Integer total = 0;
    for (unsigned long long mask = 0; mask < (1ull << r); ++mask) {
        long shifted = j;
        int parity = 0;
        for (int i = 0; i < r; ++i) {
            if (mask & (1ull << i)) {
                shifted -= static_cast<long>(spec.degrees[static_cast<std::size_t>(i)]);
                parity ^= 1;
            }
        }
        const Integer term = binomial(spec.n + shifted, spec.n);
        if (parity)
            total -= term;
        else
            total += term;
    }
    return total;
}

namespace {

long support_bound(const std::vector<long long>& degrees)
{
    long long bound = 0;
    for (long long d : degrees)
        bound += d - 1;
    return static_cast<long>(bound);
}

} // namespace

SplittingType splitting_type(const CompleteIntersectionSpec& spec)
{
    spec.validate();
    const int r = spec.codimension();
    const int target_dim = spec.n - r;
    // One index past the support; the solve must land a zero there.
    const long j_max = support_bound(spec.degrees) + 1;

    HilbertTable table(spec, j_max);
    std::vector<Integer> a(static_cast<std::size_t>(j_max) + 1);
    for (long m = 0; m <= j_max; ++m) {
        Integer value = table.h(r, m);
        for (long j = 0; j < m; ++j)
            value -= binomial(target_dim + m - j, m - j) * a[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(m)] = std::move(value); // diagonal C(n-r, 0) = 1
    }
    if (a.back() != 0)
        throw std::logic_error("splitting_type: nonzero multiplicity past the support bound");
    return SplittingType{std::move(a)};
}

SplittingType splitting_product_oracle(const std::vector<long long>& degrees)
{
    if (degrees.empty())
        throw DomainError("splitting_product_oracle: at least one degree required");
    IntPoly product = IntPoly::one();
    for (long long d : degrees)
        product = poly_mul(product, all_ones_poly(static_cast<long>(d)));
    return SplittingType{product.coeffs()};
}

Integer resubstitute(const CompleteIntersectionSpec& spec, const SplittingType& st, long m)
{
    spec.validate();
    const int target_dim = spec.n - spec.codimension();
    Integer total = 0;
    for (long j = 0; j <= m && j <= st.max_degree_index(); ++j)
        total += binomial(target_dim + m - j, m - j) * st.multiplicity(j);
    return total;
}

Integer euler_characteristic(const SplittingType& st)
{
    Integer chi = 0;
    for (long j = 0; j <= st.max_degree_index(); ++j)
        chi += st.multiplicity(j) * Integer(1 - j);
    return chi;
}

Integer euler_characteristic_on(const SplittingType& st, int target_dim)
{
    if (target_dim < 1)
        throw DomainError("euler_characteristic_on: target dimension must be >= 1");
    Integer chi = 0;
    for (long j = 0; j <= st.max_degree_index(); ++j) {
        if (j == 0) {
            chi += st.multiplicity(j);
        } else if (j > target_dim) {
            Integer term = binomial(j - 1, target_dim) * st.multiplicity(j);
            chi += (target_dim % 2 == 0) ? term : -term;
        }
    }
    return chi;
}

Integer hilbert_polynomial_constant(const CompleteIntersectionSpec& spec)
{
    spec.validate();
    const int r = spec.codimension();
    const int dim = spec.n - r; // degree of the Hilbert polynomial

    long long degree_sum = 0;
    for (long long d : spec.degrees)
        degree_sum += d;
    // Sample window beyond the regularity of the coordinate ring.
    const long m0 = static_cast<long>(degree_sum) + spec.n;

    HilbertTable table(spec, m0 + dim);
    Rational constant = 0;
    for (int k = 0; k <= dim; ++k) {
        // Lagrange basis weight at 0: prod_{l != k} (0 - x_l) / (x_k - x_l).
        Integer num = 1, den = 1;
        for (int l = 0; l <= dim; ++l) {
            if (l == k)
                continue;
            num *= Integer(-(m0 + l));
            den *= Integer(k - l);
        }
        Rational weight(num, den);
        weight.canonicalize();
        constant += Rational(table.h(r, m0 + k)) * weight;
    }
    if (constant.get_den() != 1)
        throw std::logic_error("hilbert_polynomial_constant: interpolation result not integral");
    return constant.get_num();
}

PushforwardDescription pushforward_description(const CompleteIntersectionSpec& spec)
{
    SplittingType st = splitting_type(spec);
    std::string bundle = bundle_string(st);
    HNPolygon polygon = polygon_from_splitting(st);
    return PushforwardDescription{std::move(st), std::move(bundle), std::move(polygon)};
}

} // namespace hncalc
