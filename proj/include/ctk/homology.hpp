/**
 * Reduced simplicial homology with integer and field coefficients, plus
 * homology-profile matching.  Degree 0 uses the augmentation map, so a
 * contractible complex has the all-zero profile.
 */

#ifndef CTK_HOMOLOGY_HPP
#define CTK_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "ctk/exact_linalg.hpp"
#include "ctk/simplicial_complex.hpp"

namespace ctk {

/**
 * Per-degree reduced Betti numbers and torsion coefficients.  Torsion is
 * normalized to prime powers, sorted ascending within each degree.
 */
struct HomologyProfile {
    std::vector<long long> betti;                  // index = degree
    std::vector<std::vector<long long>> torsion;   // index = degree

    /** Drop trailing all-zero degrees; betti and torsion keep equal length. */
    void normalize();

    bool trivial() const;

    /** Largest degree with nonzero homology; -1 when trivial. */
    int top_degree() const;

    long long betti_at(int k) const;
    const std::vector<long long>& torsion_at(int k) const;

    bool operator==(const HomologyProfile& o) const;
    bool operator!=(const HomologyProfile& o) const { return !(*this == o); }

    /** One line per degree: `k: betti=<b> torsion=[t1,...]`. */
    std::string to_text() const;

    static HomologyProfile parse(const std::string& text);
};

/** Split a torsion order into its prime-power components, ascending. */
std::vector<long long> prime_power_torsion(const std::vector<long long>& orders);

/**
 * Matrix of the boundary map from k-faces (columns, lex order) to (k-1)-faces
 * (rows, lex order) with signs from the ascending vertex orientation.  For
 * k = 0 the target is the augmentation: a single row of ones.
 */
IntMatrix boundary_matrix(const SimplicialComplex& K, int k);

/** Reduced integer homology in every degree 0..dim(K). */
HomologyProfile homology_z(const SimplicialComplex& K);

/** Reduced Betti numbers over Q or F_p, degrees 0..dim(K). */
std::vector<long long> betti_over_field(const SimplicialComplex& K, const FieldSpec& field);

/** Target homology of a Moore space: Z^rank plus given torsion in one degree. */
struct MooreSpec {
    long long rank = 0;
    std::vector<long long> torsion_orders;
    int degree = 1;
};

/** True iff homology_z(K) is exactly the Moore profile. */
bool matches_moore(const SimplicialComplex& K, const MooreSpec& spec);

}  // namespace ctk

#endif  // CTK_HOMOLOGY_HPP
