/**
 * Finite abstract simplicial complexes stored by their maximal faces.
 *
 * A Simplex is a strictly increasing sequence of non-negative vertex
 * identifiers; a SimplicialComplex is the downward closure of a facet set,
 * with faces enumerated on demand.  All operations are pure: no function
 * mutates a complex in place, so shared complexes may be used concurrently.
 */

#ifndef CTK_SIMPLICIAL_COMPLEX_HPP
#define CTK_SIMPLICIAL_COMPLEX_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ctk/errors.hpp"

namespace ctk {

using Vertex = int;

/** Vertices sorted strictly ascending; dimension = size() - 1. */
using Simplex = std::vector<Vertex>;

/** Face counts per dimension; counts[k] = number of k-faces. */
struct FVector {
    std::vector<long long> counts;

    /** Alternating sum of the face counts. */
    long long euler() const;
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /**
     * Build a complex from a set of simplices.  Non-maximal entries are
     * absorbed into the facets that contain them; vertex identifiers are
     * preserved as given.
     *
     * Throws EmptyInput if no simplex is given and MalformedSimplex if an
     * entry repeats a vertex or contains a negative identifier.
     */
    static SimplicialComplex from_facets(std::vector<Simplex> input);

    /** Facets sorted by (dimension, lex); never empty. */
    const std::vector<Simplex>& facets() const { return facets_; }

    /** All vertex identifiers, ascending. */
    const std::vector<Vertex>& vertex_set() const { return vertices_; }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }

    /** Maximal simplex dimension. */
    int dim() const { return dim_; }

    /** All k-faces in lexicographic order; empty when k > dim or k < 0. */
    std::vector<Simplex> faces(int k) const;

    /** Faces of every dimension, indexed by dimension. */
    std::vector<std::vector<Simplex>> all_faces() const;

    /** True if sigma is a face of this complex. */
    bool contains(const Simplex& sigma) const;

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
    std::vector<Simplex> facets_;     // inclusion-maximal, sorted by (dim, lex)
    std::vector<Vertex> vertices_;
    int dim_ = -1;
};

/** The full simplex on vertices 0..n. */
SimplicialComplex standard_simplex(int n);

/** The boundary of the n-simplex, a triangulated (n-1)-sphere on n+1 vertices. */
SimplicialComplex boundary_sphere(int n);

/**
 * The i-skeleton: all i-faces of K together with the facets of K of
 * dimension below i.
 */
SimplicialComplex skeleton(const SimplicialComplex& K, int i);

/**
 * Open star of a vertex as a face set: all faces of K containing v.
 * Throws UnknownVertex if v is not a vertex of K.
 */
std::vector<Simplex> star(const SimplicialComplex& K, Vertex v);

/** Link of a vertex: faces sigma with v not in sigma and sigma + v a face of K. */
SimplicialComplex link(const SimplicialComplex& K, Vertex v);

/**
 * Glue L to K by identifying sigma (a face of K) with the face of tau (a face
 * of L) spanned by the first dim(sigma)+1 vertices of tau; the remaining
 * vertices of L are relabeled disjointly from K.  The output is canonically
 * relabeled to 0..n-1.  Throws DimensionMismatch when dim(sigma) > dim(tau).
 */
SimplicialComplex wedge_glue(const SimplicialComplex& K, const SimplicialComplex& L,
                             const Simplex& sigma, const Simplex& tau);

/** Join K with two new apex vertices; canonically relabeled to 0..n-1. */
SimplicialComplex suspension(const SimplicialComplex& K);

/** True if every facet of K is a face of L. */
bool is_subcomplex(const SimplicialComplex& K, const SimplicialComplex& L);

long long euler_characteristic(const SimplicialComplex& K);

FVector f_vector(const SimplicialComplex& K);

/** Relabel the vertex set to 0..n-1 preserving the ascending vertex order. */
SimplicialComplex canonical_relabel(const SimplicialComplex& K);

/**
 * Product triangulation of |K| x |L| on the vertex set V(K) x V(L): the
 * staircase triangulation induced by the ascending vertex orders.  Used to
 * build the product-of-spheres grid complexes.
 */
SimplicialComplex cartesian_product(const SimplicialComplex& K, const SimplicialComplex& L);

/** Parse the `.cplx` text format: one facet per line, `#` starts a comment. */
SimplicialComplex parse_cplx(const std::string& text);

SimplicialComplex read_cplx(const std::string& path);

/** Render as `.cplx` text, one facet per line. */
std::string to_cplx(const SimplicialComplex& K);

void write_cplx(const SimplicialComplex& K, const std::string& path);

}  // namespace ctk

#endif  // CTK_SIMPLICIAL_COMPLEX_HPP
