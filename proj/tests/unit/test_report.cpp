#include <doctest.h>

#include <atomic>

#include "swf/report.hpp"

using namespace swf;

TEST_SUITE("report")
{
    TEST_CASE("analysis of the corpus meets its expectations")
    {
        for (const auto& entry : builtin_corpus()) {
            const auto a = analyze(entry.sc);
            INFO(entry.name);
            CHECK(a.modules.size() == 4);
            CHECK(all_pass(a.verdicts));
            CHECK(all_pass(check_expectations(entry, a)));
        }
        CHECK(find_corpus_entry("X2") != nullptr);
        CHECK(find_corpus_entry("X3") == nullptr);
    }

    TEST_CASE("expectations detect a mismatch")
    {
        auto entry = *find_corpus_entry("X1");
        entry.expected_invariants.push_back({"delta", Rational(5)});
        entry.expected_dims[GroupTag::Pin2][3] = 7;
        const auto vs = check_expectations(entry, analyze(entry.sc));
        CHECK_FALSE(vs[0].pass);
        CHECK(vs[0].witness_degree == 3);
        CHECK_FALSE(vs[1].pass);
        CHECK(vs[1].detail.find("delta = 2/1, expected 5/1") != std::string::npos);
    }

    TEST_CASE("verdict selection")
    {
        const auto a = analyze(StableClass{example_x1(), 0, 0});
        const auto inv = select_verdicts(a.verdicts, "invariants");
        CHECK(inv.size() == 7);
        const auto loc = select_verdicts(a.verdicts, "localization");
        CHECK(loc.size() == 4);
        CHECK(select_verdicts(a.verdicts, "gysin").size() == 12);
        const auto two = select_verdicts(a.verdicts, "z4_kernel_formula,localization_z4");
        REQUIRE(two.size() == 2);
        CHECK(two[0].name != two[1].name);
        CHECK((two[0].name == "z4_kernel_formula" || two[1].name == "z4_kernel_formula"));
        CHECK(select_verdicts(a.verdicts, "all").size() == a.verdicts.size());
        CHECK_THROWS_AS(select_verdicts(a.verdicts, "z4_kernel_formula,bogus"), std::invalid_argument);
    }

    TEST_CASE("JSON layout")
    {
        const auto a = analyze(StableClass{example_x1(), 1, Rational(1, 4)});
        const auto j = report_json(a);
        CHECK(j["complex"]["name"] == "X1");
        CHECK(j["complex"]["n"] == "1/4");
        CHECK(j["modules"].size() == 4);
        CHECK(j["modules"]["pin2"]["group"] == "pin2");
        CHECK(j["modules"]["pin2"]["grading_offset"] == "-2/1");
        CHECK(j["invariants"]["delta"] == "1/1");
        CHECK(j["invariants"]["alpha"] == "3/1");
        CHECK(j["invariants"]["q4m"]["m_odd"]["Q"] == "-1/1");
        CHECK(j["invariants"]["froyshov"].size() == 7);
        CHECK(j["verdicts"][0].contains("witness_degree"));
        const auto v = verdict_json(Verdict{"x", true, -1, {}, "ok"});
        CHECK(v["witness_degree"].is_null());
    }

    TEST_CASE("text output")
    {
        const auto a = analyze(StableClass{sphere_complex(0), 0, 0}, 8);
        const auto t = module_text("S0", a.module(GroupTag::Z2));
        CHECK(t.find("z2 Borel cohomology of S0") == 0);
        CHECK(verdicts_text({Verdict{"v", false, 2, {}, "bad"}}) == "FAIL v: bad\n");
        CHECK(invariants_text(a.invariants).find("delta_G") != std::string::npos);
    }

    TEST_CASE("parallel_for visits every index and forwards errors")
    {
        std::vector<std::atomic<int>> hits(257);
        parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
        for (const auto& h : hits)
            CHECK(h == 1);
        CHECK_THROWS_AS(parallel_for(10, 3,
                                     [](std::size_t i) {
                                         if (i == 6)
                                             throw std::runtime_error("six");
                                     }),
                        std::runtime_error);
        parallel_for(0, 0, [](std::size_t) { FAIL("called"); });
    }
}
