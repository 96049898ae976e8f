#ifndef HNCALC_TWO_HYPERSURFACES_HPP
#define HNCALC_TWO_HYPERSURFACES_HPP

#include <array>
#include <variant>

#include "hncalc/hn_core.hpp"

namespace hncalc {

// Numerical data for the intersection of two hypersurfaces of fiber degrees
// n1, n2 in the projectivization of a rank-3 bundle of degree e over a curve,
// with twisting line bundles of degrees alpha1, alpha2.
struct TwoHypersurfaceSpec {
    int n1 = 1;
    int n2 = 1;
    long long alpha1 = 0;
    long long alpha2 = 0;
    long long e = 0;

    void validate() const; // n1 >= 1 and n2 >= 1
};

struct RankDegree {
    Integer rank;
    Integer degree;

    bool operator==(const RankDegree&) const = default;
};

// Rank and degree of the j-th symmetric power of a rank-r bundle of degree e:
// (C(j+r-1, r-1), C(j+r-1, r) * e); the zero sheaf (0, 0) for j < 0.
RankDegree sym_rank_deg(int r, const Integer& e, long j);

// Presentation of the pushforward quotient as the kernel of a contraction map
// between pushed-up symmetric powers: source term, the two target summands,
// and the kernel obtained by exact-sequence additivity. kernel.rank always
// equals n1*n2 - 1.
struct KernelPresentation {
    RankDegree source;
    std::array<RankDegree, 2> targets;
    RankDegree kernel;

    bool operator==(const KernelPresentation&) const = default;
};

// n1 + n2 < 3 yields the zero sheaf (the pushforward is the structure sheaf).
std::variant<ZeroSheaf, KernelPresentation> quotient_presentation(const TwoHypersurfaceSpec& spec);

} // namespace hncalc

#endif
