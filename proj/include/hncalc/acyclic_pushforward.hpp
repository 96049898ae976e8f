#ifndef HNCALC_ACYCLIC_PUSHFORWARD_HPP
#define HNCALC_ACYCLIC_PUSHFORWARD_HPP

#include "hncalc/splitting_type.hpp"

namespace hncalc {

// A finite cover of the projective line together with a bundle upstairs whose
// zeroth and first cohomology both vanish. That hypothesis is the caller's
// assertion; the numerics can only verify its necessary consequence chi = 0.
struct AcyclicSpec {
    long long cover_degree = 1;
    long long bundle_rank = 1;
    long long bundle_degree = 0;
    long long genus = 0;

    // Throws DomainError on bad ranges and AdmissibilityError when chi != 0.
    void validate() const;
};

// Riemann-Roch on a genus-g curve: deg + rank * (1 - g).
Integer euler_char(long long bundle_degree, long long bundle_rank, long long genus);

// Pushforward of a cohomology-free bundle: cover_degree * bundle_rank copies
// of the degree -1 line bundle, i.e. a_1 = N and nothing else. Semistable of
// slope -1.
SplittingType pushforward_splitting(const AcyclicSpec& spec);

} // namespace hncalc

#endif
