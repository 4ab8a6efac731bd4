#include <doctest.h>

#include "swf/borel.hpp"
#include "swf/report.hpp"

using namespace swf;

namespace {

int rank_of(const GradedModule& m, RingGenerator g, int d) { return static_cast<int>(gf2::rank(m.matrix(g, d))); }

std::vector<int> nonzero_fixed_degrees(const BorelSuite& s, GroupTag k, int upto)
{
    const auto incl = s.fixed_inclusion(k);
    std::vector<int> out;
    for (int d = 0; d <= upto; ++d)
        if (gf2::rank(incl.cohomology[d]) > 0)
            out.push_back(d);
    return out;
}

}  // namespace

TEST_SUITE("borel")
{
    TEST_CASE("spheres have the cohomology of the classifying spaces, shifted by the level")
    {
        for (int s = 0; s <= 3; ++s) {
            const BorelSuite suite(sphere_complex(s), 24);
            for (auto k : kAllGroups) {
                const auto& m = suite.get(k).cohomology();
                for (int d = 0; d <= 24; ++d)
                    REQUIRE(m.dim(d) == classifying_dim(k, d - s));
                const auto per = periodicity_generator(k);
                const int p = ring_generator_info(per).degree;
                for (int d = s; d + p <= 24; ++d)
                    CHECK(rank_of(m, per, d) == m.dim(d));
                CHECK(suite.localization(k).pass);
            }
        }
    }

    TEST_CASE("ring relations on the sphere")
    {
        const BorelSuite suite(sphere_complex(0), 30);
        const auto& pin2 = suite.get(GroupTag::Pin2).cohomology();
        const auto& z4 = suite.get(GroupTag::Z4).cohomology();
        for (int d = 0; d + 3 <= 30; ++d)
            CHECK(pin2.power(RingGenerator::q, d, 3).is_zero());
        for (int d = 0; d + 2 <= 30; ++d)
            CHECK(z4.power(RingGenerator::Q, d, 2).is_zero());
        for (int d = 0; d + 1 <= 30; ++d) {
            CHECK(rank_of(pin2, RingGenerator::q, d) == (d % 4 <= 1 ? 1 : 0));
            CHECK(rank_of(z4, RingGenerator::Q, d) == (d % 2 == 0 ? 1 : 0));
        }
    }

    TEST_CASE("homology and cohomology are dual")
    {
        const BorelComputation c(example_x1(), GroupTag::Pin2, 14);
        const auto& h = c.homology();
        const auto& co = c.cohomology();
        CHECK(h.dims == co.dims);
        for (int d = 1; d <= 14; ++d)
            CHECK(h.matrix(RingGenerator::q, d).transpose() == co.matrix(RingGenerator::q, d - 1));
    }

    TEST_CASE("fixed-point inclusion on the worked examples")
    {
        const BorelSuite x1(example_x1(), 16), x2(example_x2(), 16);
        CHECK(nonzero_fixed_degrees(x1, GroupTag::Pin2, 10) == std::vector<int>{1, 2, 5, 6, 8, 9, 10});
        CHECK(nonzero_fixed_degrees(x2, GroupTag::Pin2, 10) == std::vector<int>{1, 2, 5, 6, 8, 9, 10});
        CHECK(nonzero_fixed_degrees(x1, GroupTag::Z4, 7) == std::vector<int>{1, 3, 4, 5, 6, 7});
        CHECK(nonzero_fixed_degrees(x2, GroupTag::Z4, 7) == std::vector<int>{1, 3, 5, 6, 7});
        CHECK(nonzero_fixed_degrees(x1, GroupTag::S1, 8) == std::vector<int>{4, 6, 8});
        CHECK(nonzero_fixed_degrees(x2, GroupTag::S1, 8) == std::vector<int>{6, 8});
        CHECK(nonzero_fixed_degrees(x1, GroupTag::Z2, 6) == std::vector<int>{4, 5, 6});
        CHECK(nonzero_fixed_degrees(x2, GroupTag::Z2, 6) == std::vector<int>{6});
    }

    TEST_CASE("localization bounds")
    {
        const BorelSuite x1(example_x1(), 20);
        CHECK(x1.localization_bound(GroupTag::Pin2) == 6);
        CHECK(x1.localization_bound(GroupTag::S1) == 6);
        CHECK(x1.localization_bound(GroupTag::Z4) == 7);
        CHECK(x1.localization_bound(GroupTag::Z2) == 7);
        for (auto k : kAllGroups) {
            const auto rep = x1.localization(k);
            CHECK(rep.pass);
            CHECK(rep.first_iso_degree <= rep.from_degree);
        }
        const BorelSuite narrow(example_x1(), 10);
        CHECK_FALSE(narrow.localization(GroupTag::Z4).pass);
    }

    TEST_CASE("restriction maps are defined for every pair and on random complexes")
    {
        const std::pair<GroupTag, GroupTag> pairs[] = {{GroupTag::Pin2, GroupTag::S1},
                                                       {GroupTag::Pin2, GroupTag::Z4},
                                                       {GroupTag::Z4, GroupTag::Z2},
                                                       {GroupTag::S1, GroupTag::Z2}};
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const auto c = random_complex(seed, 5, 6, 2);
            const BorelSuite suite(c, default_max_degree(c));
            for (auto [k, l] : pairs) {
                const auto r = suite.restriction(k, l);
                CHECK(r.homology.size() == static_cast<std::size_t>(suite.max_degree() + 1));
            }
        }
        const BorelSuite s0(sphere_complex(0), 8);
        CHECK_THROWS_AS(s0.restriction(GroupTag::Z4, GroupTag::S1), std::invalid_argument);
    }

    TEST_CASE("operators outside the window are rejected")
    {
        const BorelComputation c(sphere_complex(0), GroupTag::Pin2, 10);
        CHECK_THROWS_AS(c.cohomology().matrix(RingGenerator::v, 8), std::out_of_range);
        CHECK_THROWS_AS(c.cohomology().op(RingGenerator::W), std::invalid_argument);
        CHECK_NOTHROW(c.cohomology().matrix(RingGenerator::v, 6));
    }
}
