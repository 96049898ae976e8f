#ifndef HNCALC_RULED_SURFACE_HPP
#define HNCALC_RULED_SURFACE_HPP

#include <variant>

#include "hncalc/hn_core.hpp"

namespace hncalc {

enum class Stability { Unstable, Semistable };

// Only relabels the semistable block ("semistable" vs "strongly semistable");
// never changes a number.
enum class Characteristic { Zero, Positive };

// Numerical data for a divisor of fiber degree n on the projectivization of a
// rank-2 bundle E over a curve, cut out by a section of O(n) twisted by a
// line bundle of degree alpha. In unstable mode s and t are the degrees of
// the maximal destabilizing subbundle and of the quotient (s > t); in
// semistable mode e is the degree of E.
struct RuledSurfaceSpec {
    int n = 1;
    Stability stability = Stability::Unstable;
    long long s = 0;
    long long t = 0;
    long long e = 0;
    long long alpha = 0;
    Characteristic characteristic = Characteristic::Zero;

    void validate() const;
};

// HN polygon of the m-th symmetric power of an unstable rank-2 bundle whose
// destabilizing line subbundle has degree s and quotient degree t: m+1 rank-1
// pieces of degrees i*s + (m-i)*t, i = m down to 0. Requires m >= 1 and
// s > t.
HNPolygon sym_power_hn(int m, long long s, long long t);

// HN data of the quotient of the pushforward of the divisor's structure sheaf
// by the base structure sheaf. n = 1 gives the zero sheaf (the pushforward is
// the structure sheaf itself); n >= 2 gives n-1 rank-1 pieces in the unstable
// case and a single semistable block otherwise.
std::variant<ZeroSheaf, HNPolygon> direct_image_quotient_hn(const RuledSurfaceSpec& spec);

} // namespace hncalc

#endif
