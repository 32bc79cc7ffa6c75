/**
 * Simplicial cohomology with field coefficients as a graded algebra under the
 * Alexander-Whitney cup product, plus cup-length and essential-product
 * detection.
 *
 * Coefficients are the rationals or a prime field.  Cochains are stored with
 * rational values; over F_p the values are integers in [0, p).
 */

#ifndef CTK_COHOMOLOGY_HPP
#define CTK_COHOMOLOGY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ctk/field.hpp"
#include "ctk/simplicial_complex.hpp"

namespace ctk {

/** A k-cochain: one value per k-face, in the lexicographic face order. */
struct Cochain {
    FieldSpec field = FieldSpec::q();
    int degree = 0;
    std::vector<Rational> values;
};

/** Non-decreasing positive degrees (i1 <= ... <= in) of a nonzero product. */
struct DegreeTuple {
    std::vector<int> degrees;

    bool operator==(const DegreeTuple& o) const { return degrees == o.degrees; }
    bool operator<(const DegreeTuple& o) const { return degrees < o.degrees; }

    /** Rendered as `(i1,...,in)`. */
    std::string to_text() const;
};

/**
 * Basis of H^k for every degree together with the pairwise product table.
 * `products[{k,i,l,j}]` holds the coordinates of [basis[k][i] * basis[l][j]]
 * in the basis of H^{k+l}, for k <= l.
 */
struct CohomologyAlgebra {
    FieldSpec field = FieldSpec::q();
    std::vector<long long> dims;              // dims[k] = dim H^k, 0..dim(K)
    std::vector<std::vector<Cochain>> basis;  // cocycle representatives
    std::map<std::array<int, 4>, std::vector<Rational>> products;
};

/**
 * Cup product by the front-face/back-face rule on the sorted vertex order:
 * (a * b)([v0..v_{k+l}]) = a([v0..v_k]) * b([v_k..v_{k+l}]).
 * Throws FieldMismatch when the two cochains use different coefficients.
 */
Cochain cochain_cup(const Cochain& a, const Cochain& b, const SimplicialComplex& K);

/** Simplicial coboundary; the transpose of the boundary map one degree up. */
Cochain coboundary(const Cochain& a, const SimplicialComplex& K);

CohomologyAlgebra cohomology_algebra(const SimplicialComplex& K, const FieldSpec& field);

/**
 * Coordinates of a cocycle in the basis that cohomology_algebra produces for
 * its degree (the construction is deterministic, so the bases agree across
 * calls).  Throws DomainError when z is not a cocycle.
 */
std::vector<Rational> cocycle_coords(const Cochain& z, const SimplicialComplex& K);

/**
 * Largest n such that a product of n positive-degree classes is nonzero;
 * 0 when the reduced cohomology vanishes.
 */
int cup_length(const SimplicialComplex& K, const FieldSpec& field);

/**
 * All non-decreasing degree tuples of length <= max_len realized by a nonzero
 * product of classes of exactly those degrees, sorted.  The search extends
 * tuples degree by degree, carrying a spanning set of the realized subspace,
 * so it is sound and complete over the field.
 */
std::vector<DegreeTuple> essential_tuples(const SimplicialComplex& K,
                                          const FieldSpec& field, int max_len);

/** One line per tuple: `(i1,...,in) nonzero over <field>`. */
std::string essential_report(const std::vector<DegreeTuple>& tuples,
                             const FieldSpec& field);

}  // namespace ctk

#endif  // CTK_COHOMOLOGY_HPP
