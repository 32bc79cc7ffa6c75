#include "ctk/nerve.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "ctk/errors.hpp"
#include "ctk/homology.hpp"

namespace ctk {

namespace {

bool meets(const Simplex& face, const std::vector<Vertex>& element)
{
    for (Vertex v : element)
        if (std::binary_search(face.begin(), face.end(), v))
            return true;
    return false;
}

/** Faces of K meeting every listed element: the combinatorial intersection. */
std::vector<Simplex> intersection_faces(const SimplicialComplex& K,
                                        const CoverSpec& cover,
                                        const std::vector<int>& element_indices)
{
    std::vector<Simplex> out;
    for (const auto& level : K.all_faces())
        for (const auto& face : level) {
            bool ok = true;
            for (int j : element_indices)
                if (!meets(face, cover.elements[j])) {
                    ok = false;
                    break;
                }
            if (ok)
                out.push_back(face);
        }
    return out;
}

/**
 * Order complex of a face family under strict inclusion, as maximal chains
 * through the covering relation.  Vertex i of the result is faces[i].
 */
SimplicialComplex order_complex(const std::vector<Simplex>& faces)
{
    const int n = static_cast<int>(faces.size());
    auto subset = [&](int a, int b) {
        return faces[a].size() < faces[b].size() &&
               std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(),
                             faces[a].end());
    };
    std::vector<std::vector<int>> covers(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!subset(a, b))
                continue;
            bool immediate = true;
            for (int c = 0; c < n && immediate; ++c)
                if (subset(a, c) && subset(c, b))
                    immediate = false;
            if (immediate)
                covers[a].push_back(b);
        }
    std::vector<bool> minimal(n, true);
    for (int a = 0; a < n; ++a)
        for (int b : covers[a])
            minimal[b] = false;

    std::vector<Simplex> chains;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int a) -> void {
        chain.push_back(a);
        if (covers[a].empty())
            chains.push_back(chain);
        else
            for (int b : covers[a])
                self(self, b);
        chain.pop_back();
    };
    for (int a = 0; a < n; ++a)
        if (minimal[a])
            dfs(dfs, a);
    return SimplicialComplex::from_facets(std::move(chains));
}

bool reduced_acyclic(const HomologyProfile& h)
{
    for (long long b : h.betti)
        if (b != 0)
            return false;
    for (const auto& t : h.torsion)
        if (!t.empty())
            return false;
    return true;
}

}  // namespace

CoverSpec star_cover(const SimplicialComplex& K)
{
    CoverSpec cover;
    for (Vertex v : K.vertex_set())
        cover.elements.push_back({v});
    return cover;
}

void validate_cover(const CoverSpec& cover, const SimplicialComplex& K)
{
    if (cover.elements.empty())
        throw InvalidCover("cover has no elements");
    auto vertices = K.vertex_set();
    std::set<Vertex> host(vertices.begin(), vertices.end());
    std::set<Vertex> seen;
    for (const auto& element : cover.elements) {
        if (element.empty())
            throw InvalidCover("cover element is empty");
        for (Vertex v : element) {
            if (!host.count(v))
                throw InvalidCover("cover lists vertex " + std::to_string(v) +
                                   " which is not in the host complex");
            seen.insert(v);
        }
    }
    if (seen != host)
        throw InvalidCover("cover elements do not cover the vertex set");
}

SimplicialComplex nerve(const CoverSpec& cover, const SimplicialComplex& K)
{
    validate_cover(cover, K);
    std::vector<Simplex> facets;
    for (const auto& face : K.facets()) {
        Simplex spanned;
        for (std::size_t j = 0; j < cover.elements.size(); ++j)
            if (meets(face, cover.elements[j]))
                spanned.push_back(static_cast<Vertex>(j));
        if (!spanned.empty())
            facets.push_back(std::move(spanned));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

std::string GoodCoverVerdict::to_text() const
{
    std::ostringstream out;
    for (const auto& check : checks) {
        out << "{";
        for (std::size_t i = 0; i < check.element_indices.size(); ++i)
            out << (i ? ", " : "") << check.element_indices[i];
        out << "}: " << (check.acyclic ? "acyclic" : "not acyclic") << "\n";
    }
    out << "verdict: " << (all_acyclic ? "all intersections acyclic"
                                       : "some intersection is not acyclic")
        << " (acyclicity check, not contractibility)\n";
    return out.str();
}

GoodCoverVerdict is_good_cover_homological(const CoverSpec& cover,
                                           const SimplicialComplex& K)
{
    validate_cover(cover, K);
    GoodCoverVerdict verdict;
    verdict.all_acyclic = true;
    // non-empty intersections of elements are exactly the nerve simplices
    for (const auto& level : nerve(cover, K).all_faces())
        for (const auto& simplex : level) {
            IntersectionCheck check;
            check.element_indices.assign(simplex.begin(), simplex.end());
            auto faces = intersection_faces(K, cover, check.element_indices);
            check.acyclic = reduced_acyclic(homology_z(order_complex(faces)));
            verdict.all_acyclic = verdict.all_acyclic && check.acyclic;
            verdict.checks.push_back(std::move(check));
        }
    return verdict;
}

CoverSpec parse_cover(const std::string& text)
{
    std::istringstream in(text);
    return read_cover(in);
}

CoverSpec read_cover(std::istream& in)
{
    CoverSpec cover;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<Vertex> element;
        std::string token;
        while (row >> token) {
            try {
                std::size_t used = 0;
                int v = std::stoi(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
                element.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad vertex id '" + token + "' in cover file");
            }
        }
        if (!element.empty())
            cover.elements.push_back(std::move(element));
    }
    return cover;
}

}  // namespace ctk
