/**
 * Exhaustive, symmetry-pruned enumeration of subcomplexes of a standard
 * simplex, with homology-driven searches on top: maximal Betti numbers and
 * existence of a target homology profile on a vertex budget.
 */

#ifndef CTK_ORACLE_HPP
#define CTK_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ctk/homology.hpp"
#include "ctk/simplicial_complex.hpp"

namespace ctk {

struct EnumerationOptions {
    int max_dim = -1;                       // cap on face dimension; -1 = none
    long long node_budget = 50'000'000;     // augmentation steps before giving up
};

struct EnumerationStats {
    long long nodes_explored = 0;
    long long symmetry_classes = 0;
};

/**
 * Callbacks for the enumeration.  Faces are vertex bitmasks; `levels[d]` holds
 * the masks of the d-faces of the current family, which is always closed under
 * taking faces.  Only non-empty families are reported.
 */
class SubcomplexVisitor {
public:
    virtual ~SubcomplexVisitor() = default;

    /** Called exactly once per symmetry class of non-empty families. */
    virtual void complete(const std::vector<std::vector<int>>& levels) = 0;

    /**
     * Whether to extend this family with faces of dimension `next_dim`.
     * Declining must be monotone: valid only if no extension can matter.
     */
    virtual bool descend(const std::vector<std::vector<int>>& levels, int next_dim)
    {
        (void)levels;
        (void)next_dim;
        return true;
    }
};

/**
 * Visits every downward-closed family of faces of the simplex on n vertices
 * exactly once up to vertex permutation, by canonical-augmentation search.
 * Requires 1 <= n <= 7; throws BudgetExceeded past the node budget.  When
 * `progress` is given it is updated continuously, so counts survive a throw.
 */
EnumerationStats enumerate_subcomplexes(int n, SubcomplexVisitor& visitor,
                                        const EnumerationOptions& options = {},
                                        EnumerationStats* progress = nullptr);

/** The complex with the given face-bitmask levels as its faces. */
SimplicialComplex complex_from_levels(const std::vector<std::vector<int>>& levels);

/**
 * Maximum of the reduced i-th rational Betti number over all subcomplexes of
 * the simplex on n vertices, by exhaustive enumeration.  Faces of dimension
 * above i are never added: they can only lower the i-th Betti number.
 * Requires n <= 7 and 0 <= i <= n-2.
 */
long long max_betti(int n, int i, const EnumerationOptions& options = {});

enum class SearchOutcome { found, exhausted, budget_exceeded };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::exhausted;
    std::optional<SimplicialComplex> witness;
    long long nodes_explored = 0;
    long long symmetry_classes = 0;

    /** Outcome, node and class counts, witness vertex count when found. */
    std::string to_text() const;
};

/**
 * Searches the subcomplexes of the simplex on n vertices for one whose
 * integral homology equals `target`.  Found witnesses are re-verified from
 * scratch.  An exhausted search certifies that no complex on at most n
 * vertices has the target homology.
 */
SearchResult exists_profile(int n, const HomologyProfile& target,
                            const EnumerationOptions& options = {});

/**
 * Least n <= n_max such that some complex on n vertices realizes `target`:
 * the homology-level covering type, a lower bound for the covering type of
 * any space with this homology.  Empty when unresolved within n_max or when
 * a budget runs out.
 */
std::optional<long long> hct_lower(const HomologyProfile& target, int n_max,
                                   const EnumerationOptions& options = {});

}  // namespace ctk

#endif  // CTK_ORACLE_HPP
