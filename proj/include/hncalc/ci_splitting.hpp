#ifndef HNCALC_CI_SPLITTING_HPP
#define HNCALC_CI_SPLITTING_HPP

#include <string>
#include <vector>

#include "hncalc/exact_series.hpp"
#include "hncalc/hn_core.hpp"
#include "hncalc/splitting_type.hpp"

namespace hncalc {

// A complete intersection of hypersurfaces of the given degrees in projective
// n-space, projected to a projective space of dimension n - r (r = number of
// degrees). The projection target must be positive-dimensional.
struct CompleteIntersectionSpec {
    int n = 0;
    std::vector<long long> degrees;

    int codimension() const { return static_cast<int>(degrees.size()); }
    // Throws DomainError unless r >= 1, every d_i >= 1, and n - r >= 1.
    void validate() const;
};

// Section-space dimension table h(i, j) for the partial intersections,
// 0 <= i <= r, 0 <= j <= j_max, built from the twist recurrence
//   h(0, j) = C(n + j, n),   h(i, j) = h(i-1, j) - h(i-1, j - d_i),
// with h(., j) = 0 for j < 0.
class HilbertTable {
public:
    HilbertTable(const CompleteIntersectionSpec& spec, long j_max);

    const Integer& h(int i, long j) const; // 0 for j < 0
    long j_max() const { return j_max_; }
    int levels() const { return static_cast<int>(rows_.size()) - 1; }

private:
    long j_max_;
    std::vector<std::vector<Integer>> rows_;
};

// h(i, j) for a single (i, j); i outside [0, r] throws DomainError.
Integer hilbert_function(const CompleteIntersectionSpec& spec, int i, long j);

// Independent closed form for h(r, j) by inclusion-exclusion over degree
// subsets: sum over S of (-1)^|S| C(n + j - sum_{i in S} d_i, n). Used as an
// oracle against the recurrence; never calls HilbertTable.
Integer hilbert_oracle(const CompleteIntersectionSpec& spec, long j);

// Multiplicities a_j of the degree -j summands of the projection pushforward
// of the structure sheaf, solved from
//   sum_{j<=m} C(n-r+m-j, m-j) a_j = h(r, m),  m = 0, 1, 2, ...
// by forward substitution (unit diagonal, exact arithmetic). Output is
// truncated at the last nonzero multiplicity.
SplittingType splitting_type(const CompleteIntersectionSpec& spec);

// Derived generating-function oracle: coefficient sequence of
// prod_i (1 + t + ... + t^{d_i - 1}). Must agree with splitting_type; kept as
// an independent route, never substituted for the solve.
SplittingType splitting_product_oracle(const std::vector<long long>& degrees);

// Left-hand side of the defining triangular relation at twist m for the given
// multiplicities: sum_{j<=m} C(n-r+m-j, m-j) a_j.
Integer resubstitute(const CompleteIntersectionSpec& spec, const SplittingType& st, long m);

// Euler characteristic of a sum of line bundles on the projective line:
// sum_j a_j (1 - j).
Integer euler_characteristic(const SplittingType& st);

// Euler characteristic of a sum of line bundles on projective space of the
// given dimension k >= 1: sum_j a_j chi(O(-j)) with chi(O(-j)) the polynomial
// value C(k-j, k), i.e. 1 for j = 0, 0 for 1 <= j <= k, (-1)^k C(j-1, k)
// beyond. Reduces to euler_characteristic when k = 1.
Integer euler_characteristic_on(const SplittingType& st, int target_dim);

// Constant term P(0) of the Hilbert polynomial of the complete intersection,
// recovered by exact Lagrange interpolation of h(r, m) at n - r + 1
// consecutive twists beyond the regularity bound. Independent route to the
// Euler characteristic of the structure sheaf.
Integer hilbert_polynomial_constant(const CompleteIntersectionSpec& spec);

// Splitting type plus its rendered bundle string and HN polygon.
struct PushforwardDescription {
    SplittingType splitting;
    std::string bundle;
    HNPolygon polygon;
};

PushforwardDescription pushforward_description(const CompleteIntersectionSpec& spec);

} // namespace hncalc

#endif
