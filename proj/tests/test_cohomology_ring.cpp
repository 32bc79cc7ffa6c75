#include "doctest.h"

#include <algorithm>
#include <random>

#include "ctk/cohomology.hpp"
#include "ctk/homology.hpp"
#include "ctk/simplicial_complex.hpp"

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

SimplicialComplex projective_plane_6()
{
    return SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                           {1, 4, 6}, {1, 5, 6}, {2, 3, 6},
                                           {2, 4, 5}, {2, 5, 6}, {3, 4, 5},
                                           {3, 4, 6}});
}

SimplicialComplex torus_7()
{
    std::vector<Simplex> tris;
    for (int i = 0; i < 7; ++i) {
        Simplex a = {i, (i + 1) % 7, (i + 3) % 7};
        Simplex b = {i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        tris.push_back(a);
        tris.push_back(b);
    }
    return SimplicialComplex::from_facets(std::move(tris));
}

Cochain random_cochain(std::mt19937& rng, const SimplicialComplex& K, int degree,
                       const FieldSpec& field)
{
    std::uniform_int_distribution<long long> vals(-5, 5);
    Cochain c;
    c.field = field;
    c.degree = degree;
    for (std::size_t i = 0; i < K.faces(degree).size(); ++i) {
        long long v = vals(rng);
        if (!field.rational)
            v = ((v % field.p) + field.p) % field.p;
        c.values.emplace_back(v);
    }
    return c;
}

bool all_zero(const std::vector<Rational>& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

Cochain scale_mod(const Cochain& a, long long factor, const FieldSpec& field)
{
    Cochain out = a;
    for (auto& v : out.values) {
        v *= factor;
        if (!field.rational) {
            Rational r(((numerator(v) % field.p) + field.p) % field.p);
            v = r;
        }
    }
    return out;
}

Cochain add_cochains(const Cochain& a, const Cochain& b, const FieldSpec& field)
{
    Cochain out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] += b.values[i];
        if (!field.rational)
            out.values[i] = Rational(((numerator(out.values[i]) % field.p) + field.p) %
                                     field.p);
    }
    return out;
}

}  // namespace

TEST_CASE("degree-0 constant cochain is a unit")
{
    std::mt19937 rng(51);
    for (const auto& field : {FieldSpec::q(), FieldSpec::fp(2), FieldSpec::fp(5)}) {
        auto K = torus_7();
        Cochain unit;
        unit.field = field;
        unit.degree = 0;
        unit.values.assign(K.faces(0).size(), Rational(1));
        for (int d = 0; d <= K.dim(); ++d) {
            auto b = random_cochain(rng, K, d, field);
            CHECK(cochain_cup(unit, b, K).values == b.values);
            CHECK(cochain_cup(b, unit, K).values == b.values);
        }
    }
}

TEST_CASE("cup product errors")
{
    auto K = torus_7();
    std::mt19937 rng(52);
    auto a = random_cochain(rng, K, 1, FieldSpec::q());
    auto b = random_cochain(rng, K, 1, FieldSpec::fp(2));
    CHECK_THROWS_AS(cochain_cup(a, b, K), FieldMismatch);

    auto short_cochain = a;
    short_cochain.values.pop_back();
    CHECK_THROWS_AS(cochain_cup(short_cochain, a, K), DimensionMismatch);
}

TEST_CASE("Leibniz rule for the coboundary of a cup product")
{
    std::mt19937 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        auto K = random_complex(rng, 6, 5);
        for (const auto& field : {FieldSpec::q(), FieldSpec::fp(3)}) {
            for (int k = 0; k < K.dim(); ++k)
                for (int l = 0; k + l + 1 <= K.dim(); ++l) {
                    auto a = random_cochain(rng, K, k, field);
                    auto b = random_cochain(rng, K, l, field);
                    auto lhs = coboundary(cochain_cup(a, b, K), K);
                    auto rhs = add_cochains(
                        cochain_cup(coboundary(a, K), b, K),
                        scale_mod(cochain_cup(a, coboundary(b, K), K),
                                  k % 2 == 0 ? 1 : -1, field),
                        field);
                    CHECK(lhs.values == rhs.values);
                }
        }
    }
}

TEST_CASE("torus ring over Q")
{
    auto K = torus_7();
    auto alg = cohomology_algebra(K, FieldSpec::q());
    CHECK(alg.dims == std::vector<long long>{1, 2, 1});

    // the two degree-1 basis classes multiply onto a generator of H^2
    auto prod = alg.products.at({1, 0, 1, 1});
    CHECK_FALSE(all_zero(prod));

    CHECK(cup_length(K, FieldSpec::q()) == 2);
    auto tuples = essential_tuples(K, FieldSpec::q(), 3);
    CHECK(std::count(tuples.begin(), tuples.end(), DegreeTuple{{1, 1}}) == 1);
    CHECK(std::count(tuples.begin(), tuples.end(), DegreeTuple{{1, 1, 1}}) == 0);
}

TEST_CASE("projective plane ring over F2 and over Q")
{
    auto K = projective_plane_6();
    auto alg = cohomology_algebra(K, FieldSpec::fp(2));
    CHECK(alg.dims == std::vector<long long>{1, 1, 1});
    CHECK_FALSE(all_zero(alg.products.at({1, 0, 1, 0})));
    CHECK(cup_length(K, FieldSpec::fp(2)) == 2);

    // rationally the reduced cohomology vanishes
    auto ralg = cohomology_algebra(K, FieldSpec::q());
    CHECK(ralg.dims == std::vector<long long>{1, 0, 0});
    CHECK(cup_length(K, FieldSpec::q()) == 0);
    CHECK(essential_tuples(K, FieldSpec::q(), 2).empty());
}

TEST_CASE("spheres have cup length 1")
{
    for (int n = 2; n <= 5; ++n) {
        auto K = boundary_sphere(n);
        auto alg = cohomology_algebra(K, FieldSpec::q());
        for (const auto& [key, coords] : alg.products)
            if (key[0] > 0)
                CHECK(all_zero(coords));
        CHECK(cup_length(K, FieldSpec::q()) == 1);
    }
}

TEST_CASE("acyclic complexes")
{
    CHECK(cup_length(standard_simplex(4), FieldSpec::q()) == 0);
    CHECK(essential_tuples(standard_simplex(4), FieldSpec::fp(2), 4).empty());
    CHECK_THROWS_AS(essential_tuples(standard_simplex(2), FieldSpec::q(), 0),
                    InvalidArgument);
}

TEST_CASE("graded commutativity on basis pairs")
{
    std::vector<SimplicialComplex> corpus = {torus_7(), projective_plane_6(),
                                             boundary_sphere(3)};
    for (const auto& K : corpus) {
        for (const auto& field : {FieldSpec::q(), FieldSpec::fp(2)}) {
            auto alg = cohomology_algebra(K, field);
            for (int k = 1; k <= K.dim(); ++k)
                for (int l = k; k + l <= K.dim(); ++l)
                    for (std::size_t i = 0; i < alg.basis[k].size(); ++i)
                        for (std::size_t j = 0; j < alg.basis[l].size(); ++j) {
                            auto xy = cocycle_coords(
                                cochain_cup(alg.basis[k][i], alg.basis[l][j], K), K);
                            auto yx = cocycle_coords(
                                cochain_cup(alg.basis[l][j], alg.basis[k][i], K), K);
                            long long sign = (k * l) % 2 == 0 ? 1 : -1;
                            for (std::size_t c = 0; c < xy.size(); ++c) {
                                Rational diff = xy[c] - sign * yx[c];
                                if (!field.rational)
                                    CHECK(numerator(diff) % field.p == 0);
                                else
                                    CHECK(diff == 0);
                            }
                        }
        }
    }
}

TEST_CASE("cup length consistency with essential tuples")
{
    std::mt19937 rng(54);
    std::vector<SimplicialComplex> cases = {torus_7(), projective_plane_6(),
                                            boundary_sphere(4)};
    for (int t = 0; t < 5; ++t)
        cases.push_back(random_complex(rng, 6, 5));
    for (const auto& K : cases) {
        for (const auto& field : {FieldSpec::q(), FieldSpec::fp(2)}) {
            auto tuples = essential_tuples(K, field, K.dim() == 0 ? 1 : K.dim());
            int max_len = 0;
            for (const auto& tup : tuples) {
                max_len = std::max(max_len, static_cast<int>(tup.degrees.size()));
                int total = 0;
                for (int d : tup.degrees) {
                    CHECK(d >= 1);
                    total += d;
                }
                CHECK(total <= K.dim());
                CHECK(std::is_sorted(tup.degrees.begin(), tup.degrees.end()));
            }
            CHECK(cup_length(K, field) == max_len);
            CHECK(max_len <= std::max(K.dim(), 0));
        }
    }
}

TEST_CASE("two torus triangulations give the same ring invariants")
{
    auto grid = cartesian_product(boundary_sphere(2), boundary_sphere(2));
    auto small = torus_7();
    for (const auto& field : {FieldSpec::q(), FieldSpec::fp(2)}) {
        CHECK(cohomology_algebra(grid, field).dims ==
              cohomology_algebra(small, field).dims);
        CHECK(cup_length(grid, field) == cup_length(small, field));
    }
}

TEST_CASE("essential report formatting")
{
    auto tuples = essential_tuples(torus_7(), FieldSpec::q(), 2);
    auto report = essential_report(tuples, FieldSpec::q());
    CHECK(report.find("(1,1) nonzero over Q") != std::string::npos);
}
