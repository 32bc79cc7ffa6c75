/**
 * Integer bound formulas for covering type, PL triangulation size, and
 * LS-category, plus the aggregator that combines computed invariants into a
 * certified report.  Everything here is pure integer arithmetic.
 */

#ifndef CTK_BOUNDS_HPP
#define CTK_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctk/cohomology.hpp"
#include "ctk/homology.hpp"

namespace ctk {

/** Binomial coefficient C(n, k); zero when k < 0 or k > n. */
Int binomial(long long n, long long k);

/** Floor of the square root of a non-negative integer. */
long long integer_sqrt(long long n);

/**
 * Invariants of a space supplied by the caller: a homotopy-dimension lower
 * bound, connectivity, a category lower bound, and optionally homology and
 * essential-product data.
 */
struct SpaceProfile {
    long long hdim = 0;
    long long connectivity = 0;
    long long cat_lower = 1;
    std::optional<HomologyProfile> homology;
    std::vector<std::pair<FieldSpec, std::vector<DegreeTuple>>> essential;
};

struct BoundEntry {
    long long value = 0;
    std::string formula;
    std::string citation;
    std::string inputs;
};

/**
 * All applicable bound values with their provenance.  `best` is the maximum
 * entry for lower-bound targets; formulas whose inputs were absent are listed
 * in `skipped`.
 */
struct BoundReport {
    std::string target;  // "ct", "delta_pl", or "cat_upper"
    bool is_lower = true;
    std::vector<BoundEntry> entries;
    std::vector<std::string> skipped;
    long long best = 0;

    /** Aligned text table: value, formula, citation, inputs. */
    std::string to_text() const;

    /** One `key=value` record line per entry. */
    std::string to_records() const;
};

/** ct >= cat(cat+1)/2. */
long long ct_lower_from_cat(long long cat);

/** ct >= 1 + hdim + cat(cat-1)/2. */
long long ct_lower_from_cat_hdim(long long cat, long long hdim);

/** PL triangulations of a closed d-manifold, connectivity c:
 *  1 + d + c(cat-2) + cat(cat-1)/2 vertices. */
long long pl_lower_connected(long long d, long long c, long long cat);

/** cat <= floor((-1+sqrt(1+8n))/2) for a space with an n-element good cover. */
long long cat_upper_from_ct(long long n);

/** cat <= floor((1+sqrt(1+8(n-hdim-1)))/2); DomainError when n < hdim+1. */
long long cat_upper_from_ct_hdim(long long n, long long hdim);

/** cat <= floor(hdim/(c+1)) + 1. */
long long cat_upper_connectivity(long long hdim, long long c);

/** cat >= cuplength + 1 (normalization cat(point) = 1). */
long long cat_lower_from_cuplength(long long cl);

/**
 * ct >= i_1 + 2 i_2 + ... + n i_n + (n+1) for an essential
 * (i_1,...,i_n)-product, plus one more when the degrees are not all equal.
 */
long long ct_lower_from_tuple(const DegreeTuple& t);

enum class ProjectiveKind { real, complex_kind, quaternionic };

/** Essential-product bound for RP^n / CP^n / HP^n (degrees 1, 2, 4). */
long long projective_lower(ProjectiveKind kind, long long n);

/** Essential-product bound for U(n), exterior degrees 1,3,...,2n-1. */
long long unitary_lower(long long n);

/** Essential-product bound for SU(n), exterior degrees 3,5,...,2n-1; n >= 2. */
long long special_unitary_lower(long long n);

/**
 * Bound for an H-space whose mod-p cohomology is generated by elements of the
 * given degrees with the given truncation heights: each degree enters the
 * tuple with multiplicity height-1.  An empty list gives the contractible
 * baseline 1.
 */
long long hspace_ctp(const std::vector<std::pair<long long, long long>>& generators);

/** ct >= hdim + 3 when homology is nonzero in two different degrees. */
long long two_homologies_bump(long long hdim);

/** Exact covering type of M(Z^r, i): minimal n with C(n-1, i+1) >= r. */
long long moore_free_ct(long long r, long long i);

/**
 * Closed 2n-manifold with H_n of the given rank: 3n+3+k vertices where k is
 * minimal with C(n+k+1, k) >= rank_hn.
 */
long long manifold_2n_lower(long long n, long long rank_hn);

/** ct(S^m x S^n) >= m + 2n + 4 for m <= n; OrderViolation otherwise. */
long long product_spheres_lower(long long m, long long n);

/** ct(X v Y) <= ct_x + ct_y - min(hdim_x, hdim_y) - 1. */
long long wedge_upper(long long ct_x, long long ct_y, long long hdim_x, long long hdim_y);

/** Window i+3 <= ct(M(Z_k, i)) <= i+3k for cyclic Moore spaces. */
std::pair<long long, long long> cyclic_moore_bounds(long long k, long long i);

/**
 * Upper bound for a Moore space with free rank r and cyclic orders ks in
 * degree i: i + k0 + 3*sum(ks) - 2(n-1), where k0 is minimal with
 * C(i+k0, i+1) >= r (k0 = 0 when r = 0).
 */
long long general_moore_upper(long long r, const std::vector<long long>& ks, long long i);

/** Evaluate every applicable lower bound for ct and report the maximum. */
BoundReport best_ct_lower(const SpaceProfile& profile);

}  // namespace ctk

#endif  // CTK_BOUNDS_HPP
