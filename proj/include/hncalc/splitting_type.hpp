#ifndef HNCALC_SPLITTING_TYPE_HPP
#define HNCALC_SPLITTING_TYPE_HPP

#include <string>
#include <vector>

#include "hncalc/exact_series.hpp"

namespace hncalc {

// Multiplicity vector of a direct sum of line bundles on a projective line:
// multiplicity(j) copies of the degree -j summand. Entries are nonnegative
// and trailing zeros are trimmed. For a pushforward of a structure sheaf the
// producing operation additionally guarantees multiplicity(0) == 1 and
// total_rank() == product of the covering degrees; the carrier itself does not
// require that (other producers fill it differently).
class SplittingType {
public:
    SplittingType() = default;
    explicit SplittingType(std::vector<Integer> multiplicities);

    const std::vector<Integer>& multiplicities() const { return a_; }
    // a_j; 0 outside the stored range.
    const Integer& multiplicity(long j) const;
    // Index of the last nonzero multiplicity, -1 if all zero.
    long max_degree_index() const { return static_cast<long>(a_.size()) - 1; }
    // Sum of all multiplicities (the rank of the bundle).
    Integer total_rank() const;

    bool operator==(const SplittingType&) const = default;

private:
    std::vector<Integer> a_;
};

// "O ⊕ O(−1)^2 ⊕ O(−2)^2 ⊕ O(−3)" style rendering; "0" for the empty type.
std::string bundle_string(const SplittingType& st);

} // namespace hncalc

#endif
