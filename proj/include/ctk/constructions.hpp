/**
 * Constructive witnesses for Moore-space vertex bounds, plus the named corpus
 * of standard complexes used throughout the tests and the CLI.
 */

#ifndef CTK_CONSTRUCTIONS_HPP
#define CTK_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "ctk/homology.hpp"
#include "ctk/simplicial_complex.hpp"

namespace ctk {

/**
 * A constructed complex together with its claim.  `verified` is always
 * recomputed from the output by a homology run, never assumed.
 */
struct WitnessCertificate {
    SimplicialComplex complex;
    std::string claimed_type;
    int vertex_count = 0;
    bool verified = false;
    std::string bound_context;

    /** Structured text: claim, vertex count, verdict, context. */
    std::string to_text() const;
};

/**
 * Minimal-vertex Moore space M(Z^r, i): the i-skeleton of the simplex on
 * moore_free_ct(r, i) vertices with surplus i-faces removed while preserving
 * the boundary image.  The vertex count equals moore_free_ct(r, i) exactly.
 */
WitnessCertificate moore_free_witness(long long r, long long i);

/**
 * Moore space M(Z_k, 1) on 3k+4 vertices: the triangulated mapping cylinder
 * of the simplicial k-fold cover of a 3-vertex circle by a 3k-vertex circle,
 * with the source circle coned off.
 */
WitnessCertificate moore_cyclic_witness(long long k);

/**
 * M(Z^r + Z_{k_1} + ... + Z_{k_m}, i): wedge of the free witness and
 * (i-1)-fold suspensions of the cyclic witnesses, glued simplex-to-simplex.
 */
WitnessCertificate moore_sum_witness(long long r, const std::vector<long long>& ks,
                                     long long i);

/**
 * Named standard complexes: "rp2_6", "torus_7", "klein_8", "rp3_11",
 * "sphere_product_1_1_9".  Throws UnknownName otherwise.
 */
SimplicialComplex corpus(const std::string& name);

/** The available corpus names, sorted. */
std::vector<std::string> corpus_names();

}  // namespace ctk

#endif  // CTK_CONSTRUCTIONS_HPP
