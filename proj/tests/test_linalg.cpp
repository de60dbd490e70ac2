#include <algorithm>
#include <numeric>
#include <random>

#include <catch_amalgamated.hpp>

#include "hochhom/linalg.hpp"

using namespace hochhom;

namespace {

using Dense = std::vector<std::vector<Rational>>;

SparseMatrix<Rational> from_dense(const Dense& d, std::size_t cols)
{
    SparseMatrix<Rational> m(d.size(), cols, Rational(1));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.add(i, j, d[i][j]);
    return m;
}

std::size_t dense_rank(Dense a)
{
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c)
    {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            if (i == rank || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<int> v(-2, 2), z(0, 2);
    Dense d(rows, std::vector<Rational>(cols));
    for (auto& row : d)
        for (auto& x : row)
            x = z(rng) == 0 ? Rational(v(rng)) : Rational(0);
    return d;
}

}   // namespace

TEST_CASE("Rank and kernel examples")
{
    auto m = from_dense({{1, 2}, {2, 4}}, 2);
    auto rk = rank_kernel(m);
    REQUIRE(rk.rank == 1);
    REQUIRE(rk.kernel.size() == 1);
    SparseVector<Rational> k = rk.kernel[0];
    REQUIRE(m.apply(k).empty());
    REQUIRE(k.at(0) == -2 * k.at(1));

    auto field = CyclotomicField::get(4);
    Scalar one = Scalar::zeta(field, 0), z = Scalar::zeta(field, 1);
    SparseMatrix<Scalar> mz(1, 2, one);
    mz.add(0, 0, one);
    mz.add(0, 1, z);
    auto rz = rank_kernel(mz);
    REQUIRE(rz.rank == 1);
    REQUIRE(rz.kernel.size() == 1);
    REQUIRE(rz.kernel[0].at(0) == -z * rz.kernel[0].at(1));

    SparseMatrix<Rational> zero(3, 3, Rational(1));
    auto r0 = rank_kernel(zero);
    REQUIRE(r0.rank == 0);
    REQUIRE(r0.kernel.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        REQUIRE(r0.kernel[i] == SparseVector<Rational>{{i, Rational(1)}});
    REQUIRE_THROWS_AS(zero.add(3, 0, Rational(1)), IndexOutOfRange);
}

TEST_CASE("Randomized rank properties")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> sz(1, 8);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::size_t rows = sz(rng), cols = sz(rng);
        Dense d = random_dense(rng, rows, cols);
        auto m = from_dense(d, cols);
        auto rk = rank_kernel(m);
        REQUIRE(rk.rank == dense_rank(d));
        REQUIRE(rk.rank + rk.kernel.size() == cols);
        REQUIRE(rank(m) == rk.rank);
        REQUIRE(rank(m.transpose()) == rk.rank);
        for (const auto& v : rk.kernel)
            REQUIRE(m.apply(v).empty());
        REQUIRE(span_rank(rk.kernel) == rk.kernel.size());

        std::vector<std::size_t> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        Dense shuffled(rows, std::vector<Rational>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                shuffled[rp[i]][cp[j]] = d[i][j];
        REQUIRE(rank(from_dense(shuffled, cols)) == rk.rank);
    }
}

TEST_CASE("Matrix product and columns")
{
    auto a = from_dense({{1, 2}, {0, 1}}, 2);
    auto b = from_dense({{1, -2}, {0, 1}}, 2);
    auto c = a.multiply(b);
    REQUIRE(c.row(0) == SparseVector<Rational>{{0, Rational(1)}});
    REQUIRE(c.row(1) == SparseVector<Rational>{{1, Rational(1)}});
    REQUIRE(a.column(1) == SparseVector<Rational>{{0, Rational(2)}, {1, Rational(1)}});
    REQUIRE(a.nonzeros() == 3);
    REQUIRE_THROWS_AS(a.multiply(from_dense({{1, 2}}, 2)), IndexOutOfRange);
}

TEST_CASE("Subquotient dimensions")
{
    using V = SparseVector<Rational>;
    std::vector<V> basis{{{0, Rational(1)}}, {{1, Rational(1)}}, {{2, Rational(1)}}};
    REQUIRE(subquotient(basis, basis).dimension == 0);

    auto one = subquotient(std::vector<V>{{{0, Rational(1)}}}, std::vector<V>{});
    REQUIRE(one.dimension == 1);
    REQUIRE(one.representatives == std::vector<V>{{{0, Rational(1)}}});

    std::vector<V> cycles{{{0, Rational(1)}, {1, Rational(1)}}, {{1, Rational(1)}}};
    std::vector<V> bounds{{{0, Rational(2)}, {1, Rational(2)}}};
    auto sq = subquotient(cycles, bounds);
    REQUIRE(sq.dimension == 1);
    REQUIRE(sq.representatives.size() == 1);

    REQUIRE_THROWS_AS(subquotient(std::vector<V>{{{0, Rational(1)}}}, std::vector<V>{{{1, Rational(1)}}}),
                      NotASubspace);
}
