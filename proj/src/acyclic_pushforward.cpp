#include "hncalc/acyclic_pushforward.hpp"

#include "hncalc/errors.hpp"

namespace hncalc {

Integer euler_char(long long bundle_degree, long long bundle_rank, long long genus) {
    if (bundle_rank < 1) {
        throw DomainError("bundle rank must be at least 1");
    }
    if (genus < 0) {
        throw DomainError("genus must be nonnegative");
    }
    return to_integer(bundle_degree) + to_integer(bundle_rank) * (Integer(1) - to_integer(genus));
}

void AcyclicSpec::validate() const {
    if (cover_degree < 1) {
        throw DomainError("cover degree must be at least 1");
    }
    Integer chi = euler_char(bundle_degree, bundle_rank, genus);
    if (chi != 0) {
        throw AdmissibilityError(
            "bundle is not cohomology-free: chi = " + chi.get_str() +
            " (need deg + rank * (1 - g) = 0)");
    }
}

SplittingType pushforward_splitting(const AcyclicSpec& spec) {
    spec.validate();
    Integer total = to_integer(spec.cover_degree) * to_integer(spec.bundle_rank);
    // a_0 = 0, a_1 = cover_degree * bundle_rank
    return SplittingType(std::vector<Integer>{Integer(0), total});
}

} // namespace hncalc
