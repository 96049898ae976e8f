#include "hncalc/two_hypersurfaces.hpp"

#include <stdexcept>

namespace hncalc {

void TwoHypersurfaceSpec::validate() const
{
    if (n1 < 1 || n2 < 1)
        throw DomainError("two hypersurfaces: fiber degrees n1, n2 must be >= 1");
}

RankDegree sym_rank_deg(int r, const Integer& e, long j)
{
    if (r < 1)
        throw DomainError("sym_rank_deg: bundle rank must be >= 1");
    if (j < 0)
        return RankDegree{0, 0};
    return RankDegree{binomial(j + r - 1, r - 1), binomial(j + r - 1, r) * e};
}

namespace {

// Symmetric power of the dual bundle twisted down by a line bundle of the
// given degree (applied once per unit of rank).
RankDegree dual_sym_twisted(const Integer& e, long j, const Integer& twist_degree)
{
    RankDegree rd = sym_rank_deg(3, -e, j);
    rd.degree -= rd.rank * twist_degree;
    return rd;
}

} // namespace

std::variant<ZeroSheaf, KernelPresentation> quotient_presentation(const TwoHypersurfaceSpec& spec)
{
    spec.validate();
    if (spec.n1 + spec.n2 < 3)
        return ZeroSheaf{};

    const Integer e = to_integer(spec.e);
    const Integer alpha1 = to_integer(spec.alpha1);
    const Integer alpha2 = to_integer(spec.alpha2);
    RankDegree source =
        dual_sym_twisted(e, spec.n1 + spec.n2 - 3, alpha1 + alpha2 + e);
    std::array<RankDegree, 2> targets = {
        dual_sym_twisted(e, spec.n1 - 3, alpha1 + e),
        dual_sym_twisted(e, spec.n2 - 3, alpha2 + e),
    };

    // The contraction is surjective, so the kernel is determined by
    // additivity along the exact sequence.
    RankDegree kernel{source.rank - targets[0].rank - targets[1].rank,
                      source.degree - targets[0].degree - targets[1].degree};
    if (kernel.rank != Integer(spec.n1) * spec.n2 - 1)
        throw std::logic_error("quotient_presentation: kernel rank differs from n1*n2 - 1");

    return KernelPresentation{source, targets, kernel};
}

} // namespace hncalc
