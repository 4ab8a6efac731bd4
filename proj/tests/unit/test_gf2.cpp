#include <doctest.h>

#include <random>

#include "swf/gf2.hpp"

using namespace swf::gf2;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng() & 1U)
                m.set(i, j);
    return m;
}

Vector from_bits(std::size_t n, unsigned bits)
{
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((bits >> i) & 1U)
            v.set(i);
    return v;
}

}  // namespace

TEST_SUITE("gf2")
{
    TEST_CASE("rank of small matrices")
    {
        CHECK(rank(Matrix::identity(3)) == 3);
        CHECK(rank(Matrix(4, 5)) == 0);
        const auto m = Matrix::from_rows(3, {Vector::from_string("110"), Vector::from_string("011"),
                                             Vector::from_string("101")});
        CHECK(rank(m) == 2);
    }

    TEST_CASE("kernel and image of a 2x3 matrix")
    {
        const auto m = Matrix::from_rows(3, {Vector::from_string("110"), Vector::from_string("011")});
        const auto k = kernel_basis(m);
        REQUIRE(k.size() == 1);
        CHECK(k[0] == Vector::from_string("111"));
        CHECK(image_basis(m).size() == 2);
        CHECK(kernel_basis(Matrix(0, 3)).size() == 3);
    }

    TEST_CASE("rank-nullity and kernel membership on random matrices")
    {
        std::mt19937 rng(11);
        for (int t = 0; t < 60; ++t) {
            const auto m = random_matrix(rng, 1 + rng() % 9, 1 + rng() % 9);
            const auto k = kernel_basis(m);
            CHECK(rank(m) + k.size() == m.cols());
            CHECK(rank(m) == rank(m.transpose()));
            CHECK(image_basis(m).size() == rank(m));
            for (const auto& v : k)
                CHECK(m.apply(v).is_zero());
        }
    }

    TEST_CASE("solve returns the lexicographically least solution")
    {
        std::mt19937 rng(5);
        for (int t = 0; t < 40; ++t) {
            const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
            const auto m = random_matrix(rng, rows, cols);
            const auto b = from_bits(rows, rng() % (1U << rows));
            std::optional<Vector> best;
            for (unsigned bits = 0; bits < (1U << cols); ++bits) {
                const auto x = from_bits(cols, bits);
                if (m.apply(x) == b && (!best || x.lex_less(*best)))
                    best = x;
            }
            const auto got = solve(m, b);
            CHECK(got.has_value() == best.has_value());
            if (got && best)
                CHECK(*got == *best);
        }
    }

    TEST_CASE("preimage space agrees with brute force")
    {
        std::mt19937 rng(3);
        for (int t = 0; t < 20; ++t) {
            const auto m = random_matrix(rng, 4, 5);
            const std::vector<Vector> w{from_bits(4, rng() % 16)};
            const auto pre = preimage_space(m, w);
            std::size_t count = 0;
            for (unsigned bits = 0; bits < 32; ++bits) {
                const auto y = m.apply(from_bits(5, bits));
                if (y.is_zero() || y == w[0])
                    ++count;
            }
            CHECK(count == (std::size_t{1} << pre.size()));
        }
    }

    TEST_CASE("echelon basis reports coordinates through tags")
    {
        EchelonBasis eb(4, 2);
        CHECK(eb.insert(Vector::from_string("1100"), Vector::unit(2, 0)));
        CHECK(eb.insert(Vector::from_string("0110"), Vector::unit(2, 1)));
        CHECK_FALSE(eb.insert(Vector::from_string("1010"), Vector::unit(2, 0)));
        const auto r = eb.reduce(Vector::from_string("1010"));
        CHECK(r.residual.is_zero());
        CHECK(r.tag == Vector::from_string("11"));
        CHECK_FALSE(eb.contains(Vector::from_string("0001")));
    }

    TEST_CASE("matrix product and transpose")
    {
        std::mt19937 rng(9);
        const auto a = random_matrix(rng, 3, 4);
        const auto b = random_matrix(rng, 4, 2);
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        CHECK(a * Matrix::identity(4) == a);
    }
}
