#include <doctest.h>

#include "swf/gf2.hpp"
#include "swf/group_algebra.hpp"

using namespace swf;

namespace {

AlgebraElement el(unsigned mask) { return AlgebraElement::from_mask(static_cast<std::uint8_t>(mask)); }

const auto s = AlgebraElement::monomial(1, 0);
const auto j = AlgebraElement::monomial(0, 1);
const auto one = AlgebraElement::one();

// Homology of the subalgebra of h under the boundary: (dim H_0, dim H_1).
std::pair<int, int> subalgebra_homology(GroupTag h)
{
    std::vector<int> deg0, deg1;
    for (const auto& m : subalgebra_basis(h))
        (m.s == 0 ? deg0 : deg1).push_back(m.index());
    gf2::Matrix d(deg0.size(), deg1.size());
    for (std::size_t c = 0; c < deg1.size(); ++c) {
        const auto b = monomial_boundary(deg1[c]);
        for (std::size_t r = 0; r < deg0.size(); ++r)
            if ((b >> deg0[r]) & 1U)
                d.set(r, c);
    }
    const int rk = static_cast<int>(gf2::rank(d));
    return {static_cast<int>(deg0.size()) - rk, static_cast<int>(deg1.size()) - rk};
}

}  // namespace

TEST_SUITE("algebra")
{
    TEST_CASE("defining relations")
    {
        CHECK(s * j == j * j * j * s);
        CHECK(s * s == AlgebraElement());
        CHECK(j * j * j * j == one);
        CHECK((one + j) * (one + j) == one + j * j);
        CHECK(s * (one + j) * (one + j) * (one + j) * s == AlgebraElement());
    }

    TEST_CASE("associativity, Leibniz rule and d^2 = 0 over all elements")
    {
        for (unsigned a = 0; a < 256; ++a) {
            CHECK(boundary(boundary(el(a))).is_zero());
            for (unsigned b = 0; b < 256; ++b)
                REQUIRE(boundary(el(a) * el(b)) == boundary(el(a)) * el(b) + el(a) * boundary(el(b)));
        }
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                for (int c = 0; c < 8; ++c)
                    REQUIRE((el(1U << a) * el(1U << b)) * el(1U << c) == el(1U << a) * (el(1U << b) * el(1U << c)));
    }

    TEST_CASE("inversion is an involutive anti-automorphism commuting with the boundary")
    {
        CHECK(inversion(j) == j * j * j);
        CHECK(inversion(s) == s * j * j);
        CHECK(inversion(s * j) == s * j * j * j);
        for (unsigned a = 0; a < 256; ++a) {
            CHECK(inversion(inversion(el(a))) == el(a));
            CHECK(inversion(boundary(el(a))) == boundary(inversion(el(a))));
            for (unsigned b = 0; b < 256; ++b)
                REQUIRE(inversion(el(a) * el(b)) == inversion(el(b)) * inversion(el(a)));
        }
    }

    TEST_CASE("homology of the group algebras")
    {
        CHECK(subalgebra_homology(GroupTag::Pin2) == std::pair{2, 2});
        CHECK(subalgebra_homology(GroupTag::S1) == std::pair{1, 1});
        CHECK(subalgebra_homology(GroupTag::Z4) == std::pair{4, 0});
        CHECK(subalgebra_homology(GroupTag::Z2) == std::pair{2, 0});
    }

    TEST_CASE("subalgebras are closed and coset decompositions round-trip")
    {
        for (auto h : kAllGroups) {
            CHECK(subalgebra_basis(h).size() * coset_representatives(h).size() == 8);
            for (const auto& x : subalgebra_basis(h))
                for (const auto& y : subalgebra_basis(h))
                    CHECK(in_subalgebra(el(1U << x.index()) * el(1U << y.index()), h));
            for (unsigned a = 0; a < 256; ++a) {
                const auto d = decompose_over(el(a), h);
                CHECK(recombine(d) == el(a));
                for (const auto& c : d.coefficients)
                    CHECK(in_subalgebra(c.in_group(GroupTag::Pin2), h));
            }
            for (int m = 0; m < 8; ++m) {
                const auto sp = split_monomial(m, h);
                const auto rep = coset_representatives(h)[sp.rep].index();
                CHECK(monomial_product(sp.coefficient, rep) == m);
            }
        }
    }

    TEST_CASE("names, parsing and the subgroup lattice")
    {
        for (auto h : kAllGroups)
            CHECK(parse_group(group_name(h)) == h);
        CHECK_FALSE(parse_group("so3").has_value());
        CHECK(is_subgroup(GroupTag::Z2, GroupTag::Z4));
        CHECK(is_subgroup(GroupTag::Z2, GroupTag::S1));
        CHECK(is_subgroup(GroupTag::Z4, GroupTag::Pin2));
        CHECK_FALSE(is_subgroup(GroupTag::Z4, GroupTag::S1));
        CHECK((s * j + j).to_string() == "s j + j");
        CHECK(AlgebraElement().to_string() == "0");
        CHECK_THROWS(el(0x02).in_group(GroupTag::S1));
    }
}
