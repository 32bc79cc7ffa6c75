#include "doctest.h"

#include <random>

#include "ctk/exact_linalg.hpp"
#include "ctk/homology.hpp"
#include "ctk/simplicial_complex.hpp"

using namespace ctk;

namespace {

IntMatrix dense(const std::vector<std::vector<long long>>& rows)
{
    std::vector<std::vector<Int>> d;
    for (const auto& r : rows)
        d.emplace_back(r.begin(), r.end());
    return IntMatrix::from_dense(d);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    REQUIRE(a.cols() == b.rows());
    IntMatrix out(a.rows(), b.cols());
    auto da = a.to_dense();
    auto db = b.to_dense();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Int s = 0;
            for (int k = 0; k < a.cols(); ++k)
                s += da[i][k] * db[k][j];
            out.set(i, j, s);
        }
    return out;
}

// Exact integer determinant by fraction-free (Bareiss) elimination.
Int det(std::vector<std::vector<Int>> m)
{
    const int n = static_cast<int>(m.size());
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntMatrix random_matrix(std::mt19937& rng, int max_dim, int max_abs)
{
    std::uniform_int_distribution<int> dims(1, max_dim);
    std::uniform_int_distribution<long long> vals(-max_abs, max_abs);
    std::uniform_int_distribution<int> sparsity(0, 2);
    const int m = dims(rng), n = dims(rng);
    IntMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (sparsity(rng) != 0)
                a.set(i, j, vals(rng));
    return a;
}

void check_snf(const IntMatrix& a)
{
    auto snf = smith_normal_form(a);
    CHECK(snf.u.rows() == a.rows());
    CHECK(snf.u.cols() == a.rows());
    CHECK(snf.v.rows() == a.cols());
    CHECK(snf.v.cols() == a.cols());

    // U * A * V = D
    auto lhs = multiply(multiply(snf.u, a), snf.v).to_dense();
    auto d = snf.d.to_dense();
    CHECK(lhs == d);

    // D diagonal, positive factors with divisibility chain, matching the list
    const auto& f = snf.invariant_factors;
    for (int i = 0; i < snf.d.rows(); ++i)
        for (int j = 0; j < snf.d.cols(); ++j)
            if (i != j)
                CHECK(d[i][j] == 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(f[i] > 0);
        CHECK(d[i][i] == f[i]);
        if (i + 1 < f.size())
            CHECK(f[i + 1] % f[i] == 0);
    }
    for (int i = snf.rank(); i < std::min(snf.d.rows(), snf.d.cols()); ++i)
        CHECK(d[i][i] == 0);

    // unimodular transforms
    if (a.rows() > 0) {
        Int du = det(snf.u.to_dense());
        CHECK((du == 1 || du == -1));
    }
    if (a.cols() > 0) {
        Int dv = det(snf.v.to_dense());
        CHECK((dv == 1 || dv == -1));
    }

    // rank agrees with rational elimination
    CHECK(snf.rank() == rank_over_field(a, FieldSpec::q()));
    CHECK(smith_invariants(a) == f);
}

}  // namespace

TEST_CASE("IntMatrix basics")
{
    IntMatrix a(2, 3);
    a.set(0, 1, 5);
    a.set(1, 2, -7);
    CHECK(a.at(0, 1) == 5);
    CHECK(a.at(1, 0) == 0);
    a.set(0, 1, 0);
    CHECK(a.at(0, 1) == 0);
    CHECK(a.column(1).empty());

    auto b = dense({{1, 2, 3}, {4, 5, 6}});
    CHECK(b.to_dense() == std::vector<std::vector<Int>>{{1, 2, 3}, {4, 5, 6}});
    auto c = b.without_columns({1});
    CHECK(c.to_dense() == std::vector<std::vector<Int>>{{1, 3}, {4, 6}});
}

TEST_CASE("smith normal form on small fixed matrices")
{
    auto snf = smith_normal_form(dense({{2, 0}, {0, 3}}));
    CHECK(snf.invariant_factors == std::vector<Int>{1, 6});

    auto d1 = boundary_matrix(boundary_sphere(2), 1);
    auto s = smith_normal_form(d1);
    CHECK(s.rank() == 2);
    CHECK(s.invariant_factors == std::vector<Int>{1, 1});

    CHECK(smith_invariants(dense({{0, 0}, {0, 0}})).empty());
    CHECK(smith_invariants(dense({{4}})) == std::vector<Int>{4});
    CHECK(smith_invariants(dense({{2, 4}, {6, 8}})) == std::vector<Int>{2, 4});
}

TEST_CASE("smith normal form properties on random matrices")
{
    std::mt19937 rng(101);
    for (int trial = 0; trial < 100; ++trial)
        check_snf(random_matrix(rng, 12, 9));
}

TEST_CASE("smith normal form survives entry growth")
{
    // Dense matrix with large entries forces the big-integer path.
    std::mt19937 rng(202);
    std::uniform_int_distribution<long long> vals(-1000000000LL, 1000000000LL);
    IntMatrix a(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            a.set(i, j, vals(rng));
    check_snf(a);
}

TEST_CASE("rank over fields")
{
    auto a = dense({{2, 4}, {1, 2}});
    CHECK(rank_over_field(a, FieldSpec::q()) == 1);

    auto b = dense({{2, 0}, {0, 2}});
    CHECK(rank_over_field(b, FieldSpec::q()) == 2);
    CHECK(rank_over_field(b, FieldSpec::fp(2)) == 0);
    CHECK(rank_over_field(b, FieldSpec::fp(3)) == 2);

    CHECK_THROWS_AS(FieldSpec::fp(6), NotPrime);
    CHECK_THROWS_AS(FieldSpec::fp(1), NotPrime);

    std::mt19937 rng(303);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(rng, 8, 5);
        const int rq = rank_over_field(m, FieldSpec::q());
        // characteristic-p rank never exceeds the rational rank
        CHECK(rank_over_field(m, FieldSpec::fp(2)) <= rq);
        CHECK(rank_over_field(m, FieldSpec::fp(97)) <= rq);
        CHECK(rq == smith_normal_form(m).rank());
    }
}

TEST_CASE("image preserving column removal")
{
    // second column is a multiple of the first; third is independent
    auto a = dense({{1, 2, 0}, {0, 0, 1}});
    auto removed = image_preserving_column_removal(a, 1);
    CHECK(removed.size() == 1);
    auto trimmed = a.without_columns(removed);
    CHECK(rank_over_field(trimmed, FieldSpec::q()) == rank_over_field(a, FieldSpec::q()));

    CHECK_THROWS_AS(image_preserving_column_removal(dense({{1, 0}, {0, 1}}), 1),
                    BudgetUnachievable);

    std::mt19937 rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(rng, 8, 5);
        const int rq = rank_over_field(m, FieldSpec::q());
        const int slack = m.cols() - rq;
        if (slack == 0)
            continue;
        auto cols = image_preserving_column_removal(m, slack);
        CHECK(static_cast<int>(cols.size()) == slack);
        auto rest = m.without_columns(cols);
        CHECK(rank_over_field(rest, FieldSpec::q()) == rq);
        CHECK_THROWS_AS(image_preserving_column_removal(m, slack + 1), BudgetUnachievable);
    }
}
