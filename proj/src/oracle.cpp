#include "ctk/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "ctk/errors.hpp"
#include "ctk/exact_linalg.hpp"

namespace ctk {

namespace {

std::vector<int> mask_to_vertices(int mask)
{
    std::vector<int> out;
    for (int v = 0; mask >> v; ++v)
        if (mask & (1 << v))
            out.push_back(v);
    return out;
}

/**
 * Canonical-augmentation enumeration of downward-closed face families of the
 * simplex on n vertices.  Within a dimension, faces are added in lex order
 * and a partial face set survives only if it is the lex-least member of its
 * orbit under the stabilizer of the lower-dimensional part; non-least sets
 * are rejected, which visits each symmetry class exactly once.
 */
class Enumerator {
public:
    Enumerator(int n, SubcomplexVisitor& visitor, const EnumerationOptions& options,
               EnumerationStats* progress)
        : n_(n), visitor_(visitor), options_(options),
          stats_(progress ? *progress : local_stats_)
    {
        if (n < 1 || n > 7)
            throw InvalidArgument("enumeration supports 1 to 7 vertices");
        stats_ = EnumerationStats{};
        max_dim_ = options_.max_dim < 0 ? n - 1 : std::min(options_.max_dim, n - 1);

        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            std::vector<int> map(1 << n, 0);
            for (int mask = 0; mask < (1 << n); ++mask)
                for (int v = 0; v < n; ++v)
                    if (mask & (1 << v))
                        map[mask] |= 1 << p[v];
            mask_image_.push_back(std::move(map));
        } while (std::next_permutation(p.begin(), p.end()));

        faces_.resize(n);
        face_index_.assign(n, std::vector<int>(1 << n, -1));
        for (int mask = 1; mask < (1 << n); ++mask)
            faces_[__builtin_popcount(mask) - 1].push_back(mask);
        for (int d = 0; d < n; ++d) {
            std::sort(faces_[d].begin(), faces_[d].end(),
                      [](int a, int b) { return mask_to_vertices(a) < mask_to_vertices(b); });
            for (std::size_t j = 0; j < faces_[d].size(); ++j)
                face_index_[d][faces_[d][j]] = static_cast<int>(j);
        }
        included_.assign(1 << n, 0);
    }

    EnumerationStats run()
    {
        std::vector<int> group(mask_image_.size());
        std::iota(group.begin(), group.end(), 0);
        dim_dfs(0, group);
        return stats_;
    }

private:
    void dim_dfs(int d, const std::vector<int>& group)
    {
        std::vector<int> allowed;
        for (int mask : faces_[d]) {
            bool ok = true;
            if (d > 0)
                for (int v = 0; v < n_ && ok; ++v)
                    if ((mask & (1 << v)) && !included_[mask ^ (1 << v)])
                        ok = false;
            if (ok)
                allowed.push_back(face_index_[d][mask]);
        }
        levels_.emplace_back();
        level_dfs(d, group, allowed, -1);
        levels_.pop_back();
    }

    void level_dfs(int d, const std::vector<int>& group,
                   const std::vector<int>& allowed, int last)
    {
        for (int idx : allowed) {
            if (idx <= last)
                continue;
            if (++stats_.nodes_explored > options_.node_budget)
                throw BudgetExceeded("enumeration node budget exhausted");
            const int mask = faces_[d][idx];
            levels_.back().push_back(idx);
            included_[mask] = 1;
            if (least_in_orbit(d, group))
                level_dfs(d, group, allowed, idx);
            included_[mask] = 0;
            levels_.back().pop_back();
        }

        // the current face set is itself a complete downward-closed family
        if (levels_.back().empty() || d == max_dim_) {
            if (!(d == 0 && levels_.back().empty())) {
                ++stats_.symmetry_classes;
                visitor_.complete(snapshot());
            }
        } else if (visitor_.descend(snapshot(), d + 1)) {
            dim_dfs(d + 1, stabilizer(d, group));
        }
    }

    bool least_in_orbit(int d, const std::vector<int>& group) const
    {
        const auto& s = levels_.back();
        std::vector<int> image(s.size());
        for (int g : group) {
            const auto& map = mask_image_[g];
            for (std::size_t k = 0; k < s.size(); ++k)
                image[k] = face_index_[d][map[faces_[d][s[k]]]];
            std::sort(image.begin(), image.end());
            if (std::lexicographical_compare(image.begin(), image.end(),
                                             s.begin(), s.end()))
                return false;
        }
        return true;
    }

    std::vector<int> stabilizer(int d, const std::vector<int>& group) const
    {
        const auto& s = levels_.back();
        std::vector<int> out;
        std::vector<int> image(s.size());
        for (int g : group) {
            const auto& map = mask_image_[g];
            for (std::size_t k = 0; k < s.size(); ++k)
                image[k] = face_index_[d][map[faces_[d][s[k]]]];
            std::sort(image.begin(), image.end());
            if (std::equal(image.begin(), image.end(), s.begin(), s.end()))
                out.push_back(g);
        }
        return out;
    }

    /** Current family as mask lists per dimension, empty top level trimmed. */
    std::vector<std::vector<int>> snapshot() const
    {
        std::vector<std::vector<int>> out;
        for (std::size_t d = 0; d < levels_.size(); ++d) {
            std::vector<int> masks;
            for (int idx : levels_[d])
                masks.push_back(faces_[d][idx]);
            out.push_back(std::move(masks));
        }
        while (!out.empty() && out.back().empty())
            out.pop_back();
        return out;
    }

    int n_;
    SubcomplexVisitor& visitor_;
    EnumerationOptions options_;
    EnumerationStats local_stats_;
    EnumerationStats& stats_;
    int max_dim_ = 0;
    std::vector<std::vector<int>> mask_image_;  // per permutation: mask -> mask
    std::vector<std::vector<int>> faces_;       // per dim: masks in lex order
    std::vector<std::vector<int>> face_index_;  // per dim: mask -> position
    std::vector<std::vector<int>> levels_;      // per dim: chosen face positions
    std::vector<char> included_;
};

/** Rank over F_2 of the boundary map into dimension d-1 (augmentation at 0). */
int rank2_boundary(const std::vector<std::vector<int>>& levels, int d)
{
    if (d >= static_cast<int>(levels.size()))
        return 0;
    if (d == 0)
        return levels[0].empty() ? 0 : 1;
    std::vector<int> row_of(1 << 8, -1);
    for (std::size_t r = 0; r < levels[d - 1].size(); ++r)
        row_of[levels[d - 1][r]] = static_cast<int>(r);
    std::vector<std::uint64_t> basis;
    int rank = 0;
    for (int mask : levels[d]) {
        std::uint64_t col = 0;
        for (int v = 0; mask >> v; ++v)
            if (mask & (1 << v))
                col |= std::uint64_t{1} << row_of[mask ^ (1 << v)];
        for (std::uint64_t b : basis) {
            std::uint64_t low = b & -b;
            if (col & low)
                col ^= b;
        }
        if (col) {
            basis.push_back(col);
            ++rank;
        }
    }
    return rank;
}

/** Integer boundary matrix of the map into dimension d-1, from bitmask levels. */
IntMatrix boundary_from_levels(const std::vector<std::vector<int>>& levels, int d)
{
    if (d == 0) {
        IntMatrix a(1, static_cast<int>(levels[0].size()));
        for (int c = 0; c < a.cols(); ++c)
            a.set(0, c, 1);
        return a;
    }
    std::vector<int> row_of(1 << 8, -1);
    for (std::size_t r = 0; r < levels[d - 1].size(); ++r)
        row_of[levels[d - 1][r]] = static_cast<int>(r);
    IntMatrix a(static_cast<int>(levels[d - 1].size()),
                static_cast<int>(levels[d].size()));
    for (std::size_t c = 0; c < levels[d].size(); ++c) {
        const int mask = levels[d][c];
        int sign = 1, seen = 0;
        // omit vertices in descending order so signs alternate starting at +1
        // for the face missing the largest vertex; equivalently track position
        auto verts = mask_to_vertices(mask);
        (void)seen;
        for (std::size_t pos = 0; pos < verts.size(); ++pos) {
            sign = (pos % 2 == 0) ? 1 : -1;
            a.set(row_of[mask ^ (1 << verts[pos])], static_cast<int>(c), sign);
        }
    }
    return a;
}

struct StopSearch {};

class ProfileVisitor : public SubcomplexVisitor {
public:
    explicit ProfileVisitor(HomologyProfile target) : target_(std::move(target))
    {
        target_.normalize();
        for (std::size_t k = 0; k < target_.betti.size(); ++k)
            chi_ += (k % 2 == 0 ? 1 : -1) * target_.betti[k];
        mod2_.assign(target_.betti.size() + 1, 0);
        for (std::size_t k = 0; k < target_.betti.size(); ++k) {
            mod2_[k] += target_.betti[k];
            for (long long t : target_.torsion[k])
                if (t % 2 == 0) {
                    mod2_[k] += 1;
                    mod2_[k + 1] += 1;
                }
        }
        while (!mod2_.empty() && mod2_.back() == 0)
            mod2_.pop_back();
    }

    void complete(const std::vector<std::vector<int>>& levels) override
    {
        long long chi = 0;
        for (std::size_t d = 0; d < levels.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(levels[d].size());
        if (chi - 1 != chi_)
            return;

        const int top = static_cast<int>(levels.size());
        if (static_cast<int>(mod2_.size()) > top)
            return;  // homology demanded above the family's dimension
        std::vector<int> rank2(top + 1, 0);
        for (int d = 0; d <= top; ++d)
            rank2[d] = rank2_boundary(levels, d);
        for (int d = 0; d < top; ++d) {
            long long b2 = static_cast<long long>(levels[d].size()) - rank2[d] -
                           rank2[d + 1];
            long long want = d < static_cast<int>(mod2_.size()) ? mod2_[d] : 0;
            if (b2 != want)
                return;
        }

        auto K = complex_from_levels(levels);
        if (homology_z(K) == target_) {
            witness_ = std::move(K);
            throw StopSearch{};
        }
    }

    std::optional<SimplicialComplex> witness_;

private:
    HomologyProfile target_;
    long long chi_ = 0;
    std::vector<long long> mod2_;
};

class MaxBettiVisitor : public SubcomplexVisitor {
public:
    explicit MaxBettiVisitor(int i) : i_(i) {}

    void complete(const std::vector<std::vector<int>>& levels) override
    {
        if (static_cast<int>(levels.size()) <= i_)
            return;
        const long long ni = static_cast<long long>(levels[i_].size());
        if (ni <= best_)
            return;
        // F_2 Betti dominates the rational one: cheap sieve before exact rank
        long long b2 = ni - rank2_boundary(levels, i_);
        if (b2 <= best_)
            return;
        auto d = boundary_from_levels(levels, i_);
        long long b = ni - rank_over_field(d, FieldSpec::q());
        best_ = std::max(best_, b);
    }

    bool descend(const std::vector<std::vector<int>>& levels, int next_dim) override
    {
        if (next_dim != i_ || i_ == 0)
            return true;
        // no extension can push the i-th Betti number past the face supply
        long long supply = 0;
        std::vector<char> present(1 << 8, 0);
        for (int mask : levels[i_ - 1])
            present[mask] = 1;
        for (int mask = 0; mask < (1 << 8); ++mask) {
            if (__builtin_popcount(mask) != i_ + 1)
                continue;
            bool ok = true;
            for (int v = 0; mask >> v && ok; ++v)
                if ((mask & (1 << v)) && !present[mask ^ (1 << v)])
                    ok = false;
            supply += ok;
        }
        return supply > best_;
    }

    long long best_ = 0;

private:
    int i_;
};

}  // namespace

EnumerationStats enumerate_subcomplexes(int n, SubcomplexVisitor& visitor,
                                        const EnumerationOptions& options,
                                        EnumerationStats* progress)
{
    return Enumerator(n, visitor, options, progress).run();
}

SimplicialComplex complex_from_levels(const std::vector<std::vector<int>>& levels)
{
    std::vector<Simplex> facets;
    for (const auto& level : levels)
        for (int mask : level)
            facets.push_back(mask_to_vertices(mask));
    return SimplicialComplex::from_facets(std::move(facets));
}

long long max_betti(int n, int i, const EnumerationOptions& options)
{
    if (n < 1 || n > 7)
        throw InvalidArgument("max_betti supports 1 to 7 vertices");
    if (i < 0 || i > n - 2)
        throw InvalidArgument("max_betti needs 0 <= i <= n-2");
    MaxBettiVisitor visitor(i);
    EnumerationOptions capped = options;
    capped.max_dim = i;  // higher faces only lower the i-th Betti number
    enumerate_subcomplexes(n, visitor, capped);
    return visitor.best_;
}

std::string SearchResult::to_text() const
{
    std::ostringstream out;
    out << "outcome: ";
    switch (outcome) {
        case SearchOutcome::found: out << "found"; break;
        case SearchOutcome::exhausted: out << "exhausted-none"; break;
        case SearchOutcome::budget_exceeded: out << "budget-exceeded"; break;
    }
    out << "\nnodes explored: " << nodes_explored
        << "\nsymmetry classes: " << symmetry_classes << "\n";
    if (witness)
        out << "witness vertices: " << witness->num_vertices() << "\n";
    return out.str();
}

SearchResult exists_profile(int n, const HomologyProfile& target,
                            const EnumerationOptions& options)
{
    ProfileVisitor visitor(target);
    SearchResult result;
    EnumerationStats stats;
    try {
        enumerate_subcomplexes(n, visitor, options, &stats);
        result.outcome = SearchOutcome::exhausted;
    } catch (const StopSearch&) {
        result.outcome = SearchOutcome::found;
        result.witness = std::move(visitor.witness_);
        // independent re-verification of the reconstructed witness
        if (homology_z(*result.witness) != target)
            throw ConstructionFailed("search witness failed re-verification");
    } catch (const BudgetExceeded&) {
        result.outcome = SearchOutcome::budget_exceeded;
    }
    result.nodes_explored = stats.nodes_explored;
    result.symmetry_classes = stats.symmetry_classes;
    return result;
}

std::optional<long long> hct_lower(const HomologyProfile& target, int n_max,
                                   const EnumerationOptions& options)
{
    if (n_max < 1 || n_max > 7)
        throw InvalidArgument("hct_lower supports 1 to 7 vertices");
    for (int n = 1; n <= n_max; ++n) {
        auto result = exists_profile(n, target, options);
        if (result.outcome == SearchOutcome::found)
            return n;
        if (result.outcome == SearchOutcome::budget_exceeded)
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace ctk
