#ifndef HNCALC_HN_CORE_HPP
#define HNCALC_HN_CORE_HPP

#include <string>
#include <utility>
#include <vector>

#include "hncalc/exact_series.hpp"
#include "hncalc/splitting_type.hpp"

namespace hncalc {

// One semistable graded piece of a Harder-Narasimhan filtration, identified by
// its numerical invariants plus a human-readable tensor-word label.
struct GradedPiece {
    Integer rank;   // >= 1
    Integer degree;
    std::string label;

    bool operator==(const GradedPiece&) const = default;
};

// Slope comparison by exact cross-multiplication; never materializes a
// fraction. Returns -1, 0, +1 as mu(a) <, ==, > mu(b). Ranks must be positive.
int compare_slopes(const GradedPiece& a, const GradedPiece& b);

// Marker for the zero sheaf, kept distinct from any polygon so "no pieces"
// can never be misread as a rank-0 bundle.
struct ZeroSheaf {
    bool operator==(const ZeroSheaf&) const = default;
};

// Validated HN data: graded pieces with strictly decreasing slopes (maximal
// slope first) and the induced cumulative (rank, degree) vertices starting at
// (0, 0). Construct through polygon_from_pieces / polygon_from_splitting.
class HNPolygon {
public:
    const std::vector<GradedPiece>& pieces() const { return pieces_; }
    // vertices()[k] = (sum of first k ranks, sum of first k degrees).
    const std::vector<std::pair<Integer, Integer>>& vertices() const { return vertices_; }
    Integer total_rank() const { return vertices_.back().first; }
    Integer total_degree() const { return vertices_.back().second; }

    bool operator==(const HNPolygon&) const = default;

private:
    friend HNPolygon polygon_from_pieces(const std::vector<GradedPiece>& pieces);

    explicit HNPolygon(std::vector<GradedPiece> pieces);

    std::vector<GradedPiece> pieces_;
    std::vector<std::pair<Integer, Integer>> vertices_;
};

// Assembles a polygon from pieces ordered by slope. Adjacent pieces of equal
// slope are merged into one semistable block (ranks and degrees added, labels
// joined); an adjacent strictly increasing slope pair throws
// InvalidFiltration. The sequence must be nonempty and every rank positive.
HNPolygon polygon_from_pieces(const std::vector<GradedPiece>& pieces);

// HN polygon of a direct sum of line bundles on a projective line: one piece
// per nonzero multiplicity a_j, rank a_j and degree -j*a_j, j increasing.
HNPolygon polygon_from_splitting(const SplittingType& st);

} // namespace hncalc

#endif
