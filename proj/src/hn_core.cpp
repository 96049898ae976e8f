#include "hncalc/hn_core.hpp"

#include <utility>

namespace hncalc {

int compare_slopes(const GradedPiece& a, const GradedPiece& b)
{
    if (a.rank <= 0 || b.rank <= 0)
        throw DomainError("compare_slopes: ranks must be positive");
    // mu(a) ? mu(b)  <=>  a.degree * b.rank ? b.degree * a.rank
    const Integer lhs = a.degree * b.rank;
    const Integer rhs = b.degree * a.rank;
    return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

HNPolygon::HNPolygon(std::vector<GradedPiece> pieces)
    : pieces_(std::move(pieces))
{
    vertices_.reserve(pieces_.size() + 1);
    Integer rank = 0, degree = 0;
    vertices_.emplace_back(rank, degree);
    for (const auto& p : pieces_) {
        rank += p.rank;
        degree += p.degree;
        vertices_.emplace_back(rank, degree);
    }
}

HNPolygon polygon_from_pieces(const std::vector<GradedPiece>& pieces)
{
    if (pieces.empty())
        throw DomainError("polygon_from_pieces: piece sequence must be nonempty");

    std::vector<GradedPiece> merged;
    for (const auto& piece : pieces) {
        if (piece.rank < 1)
            throw DomainError("polygon_from_pieces: piece ranks must be >= 1");
        if (merged.empty()) {
            merged.push_back(piece);
            continue;
        }
        const int cmp = compare_slopes(merged.back(), piece);
        if (cmp < 0)
            throw InvalidFiltration(
                "polygon_from_pieces: slopes increase between adjacent pieces; "
                "not a Harder-Narasimhan sequence");
        if (cmp == 0) {
            // Equal-slope neighbors form one semistable block.
            merged.back().rank += piece.rank;
            merged.back().degree += piece.degree;
            merged.back().label += " ⊕ " + piece.label;
        } else {
            merged.push_back(piece);
        }
    }
    return HNPolygon(std::move(merged));
}

HNPolygon polygon_from_splitting(const SplittingType& st)
{
    std::vector<GradedPiece> pieces;
    for (long j = 0; j <= st.max_degree_index(); ++j) {
        const Integer& a = st.multiplicity(j);
        if (a == 0)
            continue;
        std::string label = j == 0 ? "O" : "O(−" + std::to_string(j) + ")";
        if (a > 1)
            label += "^" + a.get_str();
        pieces.push_back(GradedPiece{a, Integer(-j) * a, std::move(label)});
    }
    // Distinct j means distinct slope -j; the constructor never merges here.
    return polygon_from_pieces(pieces);
}

} // namespace hncalc
