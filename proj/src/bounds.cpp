#include "ctk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ctk {

Int binomial(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Int out = 1;
    for (long long j = 1; j <= k; ++j) {
        out *= (n - k + j);
        out /= j;
    }
    return out;
}

long long integer_sqrt(long long n)
{
    if (n < 0)
        throw DomainError("integer_sqrt of a negative number");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

namespace {

void require(bool cond, const char* what)
{
    if (!cond)
        throw InvalidArgument(what);
}

}  // namespace

long long ct_lower_from_cat(long long cat)
{
    require(cat >= 1, "cat must be >= 1");
    return cat * (cat + 1) / 2;
}

long long ct_lower_from_cat_hdim(long long cat, long long hdim)
{
    require(cat >= 1, "cat must be >= 1");
    require(hdim >= 0, "hdim must be >= 0");
    return 1 + hdim + cat * (cat - 1) / 2;
}

long long pl_lower_connected(long long d, long long c, long long cat)
{
    require(d >= 1, "dimension must be >= 1");
    require(c >= 0 && c <= d - 1, "connectivity must satisfy 0 <= c <= d-1");
    require(cat >= 1, "cat must be >= 1");
    return 1 + d + c * (cat - 2) + cat * (cat - 1) / 2;
}

long long cat_upper_from_ct(long long n)
{
    const long long radicand = 1 + 8 * n;
    if (radicand < 0)
        throw DomainError("negative radicand");
    return (integer_sqrt(radicand) - 1) / 2;
}

long long cat_upper_from_ct_hdim(long long n, long long hdim)
{
    const long long radicand = 1 + 8 * (n - hdim - 1);
    if (radicand < 0)
        throw DomainError("negative radicand: vertex budget below hdim+1");
    return (integer_sqrt(radicand) + 1) / 2;
}

long long cat_upper_connectivity(long long hdim, long long c)
{
    require(hdim >= 0, "hdim must be >= 0");
    require(c >= 0, "connectivity must be >= 0");
    return hdim / (c + 1) + 1;
}

long long cat_lower_from_cuplength(long long cl)
{
    require(cl >= 0, "cup-length must be >= 0");
    return cl + 1;
}

long long ct_lower_from_tuple(const DegreeTuple& t)
{
    const auto& d = t.degrees;
    require(!d.empty(), "degree tuple must be non-empty");
    require(std::is_sorted(d.begin(), d.end()), "degree tuple must be non-decreasing");
    require(d.front() >= 1, "degrees must be >= 1");
    const long long n = static_cast<long long>(d.size());
    long long total = n + 1;
    for (long long k = 0; k < n; ++k)
        total += (k + 1) * d[k];
    if (d.front() != d.back())
        ++total;
    return total;
}

long long projective_lower(ProjectiveKind kind, long long n)
{
    require(n >= 1, "n must be >= 1");
    int degree = kind == ProjectiveKind::real ? 1
               : kind == ProjectiveKind::complex_kind ? 2
                                                      : 4;
    DegreeTuple t;
    t.degrees.assign(n, degree);
    return ct_lower_from_tuple(t);
}

long long unitary_lower(long long n)
{
    require(n >= 1, "n must be >= 1");
    DegreeTuple t;
    for (long long j = 1; j <= n; ++j)
        t.degrees.push_back(static_cast<int>(2 * j - 1));
    return ct_lower_from_tuple(t);
}

long long special_unitary_lower(long long n)
{
    require(n >= 2, "n must be >= 2");
    DegreeTuple t;
    for (long long j = 2; j <= n; ++j)
        t.degrees.push_back(static_cast<int>(2 * j - 1));
    return ct_lower_from_tuple(t);
}

long long hspace_ctp(const std::vector<std::pair<long long, long long>>& generators)
{
    if (generators.empty())
        return 1;
    DegreeTuple t;
    for (const auto& [degree, height] : generators) {
        require(degree >= 1, "generator degree must be >= 1");
        require(height >= 2, "generator height must be >= 2");
        for (long long j = 0; j < height - 1; ++j)
            t.degrees.push_back(static_cast<int>(degree));
    }
    std::sort(t.degrees.begin(), t.degrees.end());
    return ct_lower_from_tuple(t);
}

long long two_homologies_bump(long long hdim)
{
    require(hdim >= 1, "hdim must be >= 1");
    return hdim + 3;
}

long long moore_free_ct(long long r, long long i)
{
    require(r >= 1, "rank must be >= 1");
    require(i >= 1, "degree must be >= 1");
    long long n = i + 2;
    while (binomial(n - 1, i + 1) < r)
        ++n;
    return n;
}

long long manifold_2n_lower(long long n, long long rank_hn)
{
    require(n >= 1, "n must be >= 1");
    require(rank_hn >= 1, "rank must be >= 1");
    long long k = 0;
    while (binomial(n + k + 1, k) < rank_hn)
        ++k;
    return 3 * n + 3 + k;
}

long long product_spheres_lower(long long m, long long n)
{
    require(m >= 1, "m must be >= 1");
    if (m > n)
        throw OrderViolation("sphere dimensions must satisfy m <= n");
    return m + 2 * n + 4;
}

long long wedge_upper(long long ct_x, long long ct_y, long long hdim_x, long long hdim_y)
{
    require(ct_x >= 1 && ct_y >= 1, "covering types must be >= 1");
    require(hdim_x >= 0 && hdim_y >= 0, "hdims must be >= 0");
    return ct_x + ct_y - std::min(hdim_x, hdim_y) - 1;
}

std::pair<long long, long long> cyclic_moore_bounds(long long k, long long i)
{
    require(k >= 2, "cyclic order must be >= 2");
    require(i >= 1, "degree must be >= 1");
    return {i + 3, i + 3 * k};
}

long long general_moore_upper(long long r, const std::vector<long long>& ks, long long i)
{
    require(!ks.empty(), "at least one cyclic summand is required");
    require(r >= 0, "rank must be >= 0");
    require(i >= 1, "degree must be >= 1");
    long long sum = 0;
    for (long long k : ks) {
        require(k >= 2, "cyclic orders must be >= 2");
        sum += k;
    }
    long long k0 = 0;
    if (r > 0)
        while (binomial(i + k0, i + 1) < r)
            ++k0;
    const long long n = static_cast<long long>(ks.size());
    return i + k0 + 3 * sum - 2 * (n - 1);
}

BoundReport best_ct_lower(const SpaceProfile& profile)
{
    require(profile.cat_lower >= 1, "cat_lower must be >= 1");
    require(profile.hdim >= 0, "hdim must be >= 0");
    require(profile.connectivity <= profile.hdim, "connectivity must be <= hdim");

    BoundReport report;
    report.target = "ct";
    report.is_lower = true;

    bool no_tuples = true;
    for (const auto& [field, tuples] : profile.essential)
        if (!tuples.empty())
            no_tuples = false;
    const bool contractible =
        profile.homology && profile.homology->trivial() && no_tuples;
    if (contractible) {
        report.entries.push_back({1, "contractible", "trivial reduced homology", ""});
        report.best = 1;
        return report;
    }

    auto inputs = [](std::initializer_list<std::pair<const char*, long long>> kv) {
        std::ostringstream out;
        bool first = true;
        for (const auto& [k, v] : kv) {
            out << (first ? "" : " ") << k << "=" << v;
            first = false;
        }
        return out.str();
    };

    report.entries.push_back({profile.hdim + 2, "dimension-baseline",
                              "single essential class in the top degree",
                              inputs({{"hdim", profile.hdim}})});
    report.entries.push_back({ct_lower_from_cat(profile.cat_lower), "cat-quadratic",
                              "quadratic LS-category estimate",
                              inputs({{"cat", profile.cat_lower}})});
    report.entries.push_back(
        {ct_lower_from_cat_hdim(profile.cat_lower, profile.hdim), "cat-hdim",
         "dimension plus LS-category estimate",
         inputs({{"cat", profile.cat_lower}, {"hdim", profile.hdim}})});

    if (profile.homology) {
        int nonzero_degrees = 0;
        for (std::size_t k = 0; k < profile.homology->betti.size(); ++k)
            if (profile.homology->betti[k] != 0 || !profile.homology->torsion[k].empty())
                ++nonzero_degrees;
        if (nonzero_degrees >= 2 && profile.hdim >= 1)
            report.entries.push_back({two_homologies_bump(profile.hdim),
                                      "two-degrees-bump",
                                      "two nonzero homology degrees estimate",
                                      inputs({{"hdim", profile.hdim}})});
    } else {
        report.skipped.push_back("two-degrees-bump: homology profile absent");
    }

    if (no_tuples) {
        report.skipped.push_back("essential-product: no essential tuples supplied");
    } else {
        for (const auto& [field, tuples] : profile.essential) {
            const DegreeTuple* best_tuple = nullptr;
            long long best_value = 0;
            for (const auto& t : tuples) {
                long long v = ct_lower_from_tuple(t);
                if (!best_tuple || v > best_value) {
                    best_tuple = &t;
                    best_value = v;
                }
            }
            if (best_tuple)
                report.entries.push_back({best_value, "essential-product",
                                          "essential product length-weighted estimate",
                                          "tuple=" + best_tuple->to_text() + " field=" +
                                              field.name()});
        }
    }

    report.best = 0;
    for (const auto& e : report.entries)
        report.best = std::max(report.best, e.value);
    return report;
}

std::string BoundReport::to_text() const
{
    std::size_t wv = 5, wf = 7, wc = 8;
    for (const auto& e : entries) {
        wv = std::max(wv, std::to_string(e.value).size());
        wf = std::max(wf, e.formula.size());
        wc = std::max(wc, e.citation.size());
    }
    std::ostringstream out;
    out << target << " " << (is_lower ? "lower" : "upper") << " bounds\n";
    for (const auto& e : entries) {
        std::string v = std::to_string(e.value);
        out << std::string(wv - v.size(), ' ') << v << "  " << e.formula
            << std::string(wf - e.formula.size(), ' ') << "  " << e.citation
            << std::string(wc - e.citation.size(), ' ') << "  " << e.inputs << "\n";
    }
    for (const auto& s : skipped)
        out << "skipped: " << s << "\n";
    out << "best: " << best << "\n";
    return out.str();
}

std::string BoundReport::to_records() const
{
    std::ostringstream out;
    for (const auto& e : entries)
        out << "value=" << e.value << "\tformula=" << e.formula << "\tcitation="
            << e.citation << "\tinputs=" << e.inputs << "\n";
    for (const auto& s : skipped)
        out << "skipped=" << s << "\n";
    out << "best=" << best << "\n";
    return out.str();
}

}  // namespace ctk
