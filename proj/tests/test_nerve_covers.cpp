#include "doctest.h"

#include <algorithm>
#include <random>

#include "ctk/constructions.hpp"
#include "ctk/homology.hpp"
#include "ctk/nerve.hpp"

using namespace ctk;

namespace {

SimplicialComplex random_complex(std::mt19937& rng, int n, int max_facets)
{
    std::uniform_int_distribution<int> nf(1, max_facets);
    std::uniform_int_distribution<int> dim(0, n - 1);
    std::vector<Simplex> facets;
    const int count = nf(rng);
    for (int i = 0; i < count; ++i) {
        int d = dim(rng);
        std::vector<int> verts(n);
        for (int v = 0; v < n; ++v)
            verts[v] = v;
        std::shuffle(verts.begin(), verts.end(), rng);
        Simplex f(verts.begin(), verts.begin() + d + 1);
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace

TEST_CASE("star cover shape")
{
    CHECK(star_cover(boundary_sphere(2)).elements.size() == 3);
    CHECK(star_cover(corpus("torus_7")).elements.size() == 7);
    for (const auto& name : corpus_names()) {
        auto K = corpus(name);
        CHECK(star_cover(K).elements.size() == K.vertex_set().size());
    }
}

TEST_CASE("nerve of the star cover recovers the complex")
{
    for (const auto& name : corpus_names()) {
        auto K = corpus(name);
        auto N = nerve(star_cover(K), K);
        CHECK(N == canonical_relabel(K));
        CHECK(homology_z(N) == homology_z(K));
    }
    std::mt19937 rng(20260824);
    for (int trial = 0; trial < 50; ++trial) {
        auto K = random_complex(rng, 7, 8);
        CHECK(nerve(star_cover(K), K) == canonical_relabel(K));
    }
}

TEST_CASE("nerve of coarser covers")
{
    auto circle = boundary_sphere(2);
    CoverSpec split;
    split.elements = {{0}, {1, 2}};
    CHECK(nerve(split, circle) == standard_simplex(1));

    CoverSpec redundant = star_cover(circle);
    redundant.elements.push_back({0, 1, 2});
    auto N = nerve(redundant, circle);
    CHECK(euler_characteristic(N) == 1);
    HomologyProfile h = homology_z(N);
    CHECK(h.betti_at(0) == 0);  // reduced: connected
    CHECK(h.betti_at(1) == 0);
}

TEST_CASE("cover validation")
{
    auto circle = boundary_sphere(2);
    CoverSpec bad_vertex;
    bad_vertex.elements = {{0, 1}, {2, 9}};
    CHECK_THROWS_AS(nerve(bad_vertex, circle), InvalidCover);

    CoverSpec not_covering;
    not_covering.elements = {{0, 1}};
    CHECK_THROWS_AS(nerve(not_covering, circle), InvalidCover);

    CoverSpec empty_element;
    empty_element.elements = {{0, 1, 2}, {}};
    CHECK_THROWS_AS(nerve(empty_element, circle), InvalidCover);

    CHECK_THROWS_AS(nerve(CoverSpec{}, circle), InvalidCover);
}

TEST_CASE("star covers of the corpus are homologically good")
{
    for (const auto& name : corpus_names()) {
        if (name == "rp3_11")
            continue;  // covered separately; larger run
        auto K = corpus(name);
        auto verdict = is_good_cover_homological(star_cover(K), K);
        CHECK(verdict.all_acyclic);
        std::size_t total_faces = 0;
        for (const auto& level : K.all_faces())
            total_faces += level.size();
        CHECK(verdict.checks.size() == total_faces);
        CHECK(verdict.to_text().find("all intersections acyclic") !=
              std::string::npos);
        CHECK(verdict.to_text().find("not contractibility") != std::string::npos);
    }
}

TEST_CASE("star cover of the projective 3-space is homologically good")
{
    auto K = corpus("rp3_11");
    CHECK(is_good_cover_homological(star_cover(K), K).all_acyclic);
}

TEST_CASE("two arcs meeting twice fail the good cover check")
{
    auto circle = boundary_sphere(2);
    CoverSpec arcs;
    arcs.elements = {{0, 1}, {1, 2}};
    auto verdict = is_good_cover_homological(arcs, circle);
    CHECK_FALSE(verdict.all_acyclic);
    bool pair_failed = false;
    for (const auto& check : verdict.checks)
        if (check.element_indices == std::vector<int>{0, 1})
            pair_failed = !check.acyclic;
    CHECK(pair_failed);
    CHECK(verdict.to_text().find("not acyclic") != std::string::npos);
}

TEST_CASE("single element cover of a contractible complex passes")
{
    auto simplex = standard_simplex(3);
    CoverSpec whole;
    whole.elements = {{0, 1, 2, 3}};
    auto verdict = is_good_cover_homological(whole, simplex);
    CHECK(verdict.all_acyclic);
    CHECK(verdict.checks.size() == 1);
}

TEST_CASE("cover file parsing")
{
    auto cover = parse_cover("0 1\n\n1 2\n");
    REQUIRE(cover.elements.size() == 2);
    CHECK(cover.elements[0] == std::vector<Vertex>{0, 1});
    CHECK(cover.elements[1] == std::vector<Vertex>{1, 2});
    CHECK_THROWS_AS(parse_cover("0 x 2\n"), ParseError);
}
