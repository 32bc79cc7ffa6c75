/**
 * Vertex-star covers of a simplicial complex, the nerve construction, and a
 * homological good-cover check.
 */

#ifndef CTK_NERVE_HPP
#define CTK_NERVE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ctk/simplicial_complex.hpp"

namespace ctk {

/**
 * A cover of a host complex K by unions of open vertex stars: each element is
 * a vertex subset S, standing for the union of the open stars of the vertices
 * in S.  Valid covers have non-empty elements drawn from the vertices of K
 * whose union is all of vertex_set(K).
 */
struct CoverSpec {
    std::vector<std::vector<Vertex>> elements;
};

/** The cover with one singleton element per vertex of K. */
CoverSpec star_cover(const SimplicialComplex& K);

/**
 * Validates `cover` against K (throws InvalidCover otherwise).
 */
void validate_cover(const CoverSpec& cover, const SimplicialComplex& K);

/**
 * The nerve of the cover: vertex j per element, and a subset of elements
 * spans a simplex iff the corresponding unions of open stars intersect —
 * combinatorially, iff some face of K meets every one of their vertex sets.
 * Throws InvalidCover for an invalid cover.
 */
SimplicialComplex nerve(const CoverSpec& cover, const SimplicialComplex& K);

/** One non-empty intersection of cover elements and its acyclicity verdict. */
struct IntersectionCheck {
    std::vector<int> element_indices;
    bool acyclic = false;
};

/** Per-intersection acyclicity verdicts; `all_acyclic` is the conjunction. */
struct GoodCoverVerdict {
    std::vector<IntersectionCheck> checks;
    bool all_acyclic = false;

    /** One line per intersection plus a summary line. */
    std::string to_text() const;
};

/**
 * Checks every non-empty intersection of cover elements for vanishing reduced
 * integral homology.  This is an acyclicity check, not contractibility: it is
 * a necessary condition for a good cover, not a sufficient one.  Each
 * intersection is examined through the order complex of the faces of K that
 * meet every participating element, which triangulates the open intersection.
 */
GoodCoverVerdict is_good_cover_homological(const CoverSpec& cover,
                                           const SimplicialComplex& K);

/**
 * Cover file format: one element per line, space-separated vertex ids.
 * Blank lines are ignored.  Throws ParseError on malformed input.
 */
CoverSpec parse_cover(const std::string& text);
CoverSpec read_cover(std::istream& in);

}  // namespace ctk

#endif  // CTK_NERVE_HPP
