#include "hncalc/ruled_surface.hpp"

#include <string>
#include <vector>

namespace hncalc {

namespace {

// "name", "name^{⊗k}", or empty for k = 0; negative k allowed.
std::string tensor_power(const std::string& name, long long k)
{
    if (k == 0)
        return {};
    if (k == 1)
        return name;
    std::string exp = k < 0 ? "−" + std::to_string(-k) : std::to_string(k);
    return name + "^{⊗" + exp + "}";
}

std::string join_tensor(std::initializer_list<std::string> factors)
{
    std::string out;
    for (const auto& f : factors) {
        if (f.empty())
            continue;
        if (!out.empty())
            out += " ⊗ ";
        out += f;
    }
    return out.empty() ? std::string("O") : out;
}

} // namespace

void RuledSurfaceSpec::validate() const
{
    if (n < 1)
        throw DomainError("ruled surface: fiber degree n must be >= 1");
    if (stability == Stability::Unstable && s <= t)
        throw DomainError("ruled surface: unstable mode requires s > t");
}

HNPolygon sym_power_hn(int m, long long s, long long t)
{
    if (m < 1)
        throw DomainError("sym_power_hn: m must be >= 1");
    if (s <= t)
        throw DomainError("sym_power_hn: requires s > t (destabilizing degree exceeds quotient degree)");

    std::vector<GradedPiece> pieces;
    pieces.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = m; i >= 0; --i) {
        Integer degree = Integer(i) * to_integer(s) + Integer(m - i) * to_integer(t);
        std::string label = join_tensor({tensor_power("A", i), tensor_power("(B/A)", m - i)});
        pieces.push_back(GradedPiece{1, std::move(degree), std::move(label)});
    }
    return polygon_from_pieces(pieces);
}

std::variant<ZeroSheaf, HNPolygon> direct_image_quotient_hn(const RuledSurfaceSpec& spec)
{
    spec.validate();
    if (spec.n == 1)
        return ZeroSheaf{};

    const int m = spec.n - 2; // symmetric power of the dual bundle

    if (spec.stability == Stability::Semistable) {
        // Rank n-1 block of degree -C(n-1,2)e - (n-1)(alpha + e).
        Integer degree = -binomial(spec.n - 1, 2) * to_integer(spec.e)
                         - Integer(spec.n - 1) * (to_integer(spec.alpha) + to_integer(spec.e));
        std::string qualifier =
            spec.characteristic == Characteristic::Positive ? "strongly semistable" : "semistable";
        std::string label =
            join_tensor({m > 0 ? "Sym^{" + std::to_string(m) + "}(E^*)" : std::string{},
                         "A^*", "det E^*"})
            + " (" + qualifier + ")";
        return polygon_from_pieces({GradedPiece{Integer(spec.n - 1), std::move(degree), std::move(label)}});
    }

    // Dualizing swaps the HN degrees (s, t) -> (-t, -s); the twist by
    // A^* ⊗ det E^* shifts every piece by -alpha - (s + t).
    const Integer twist = -to_integer(spec.alpha) - (to_integer(spec.s) + to_integer(spec.t));
    std::vector<GradedPiece> pieces;
    pieces.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = m; i >= 0; --i) {
        Integer degree = Integer(i) * -to_integer(spec.t) + Integer(m - i) * -to_integer(spec.s) + twist;
        std::string label = join_tensor({i == 1 ? "(E/S)^*" : tensor_power("(E/S)", -i),
                                         (m - i) == 1 ? "S^*" : tensor_power("S", -(m - i)),
                                         "A^*", "det E^*"});
        pieces.push_back(GradedPiece{1, std::move(degree), std::move(label)});
    }
    return polygon_from_pieces(pieces);
}

} // namespace hncalc
