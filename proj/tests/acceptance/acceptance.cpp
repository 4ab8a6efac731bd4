// Acceptance checks AC1..AC7. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "swf/report.hpp"

using namespace swf;

namespace {

constexpr double kAc1Seconds = 5.0;
constexpr double kAc2Seconds = 10.0;
constexpr double kAc3Seconds = 120.0;
constexpr int kAc1MaxDegree = 40;
constexpr int kFuzzCount = 100;
constexpr std::uint64_t kFuzzSeed = 20261017;
constexpr int kFuzzMaxGens = 6;
constexpr int kFuzzMaxDegree = 8;
constexpr int kFuzzMaxLevel = 2;
constexpr int kExampleTop = 12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

int rank_of(const GradedModule& m, RingGenerator g, int d) { return static_cast<int>(gf2::rank(m.matrix(g, d))); }

// H^i(BK) from its ring presentation: F[q, v]/q^3, F[Q, U]/Q^2, F[U], F[W].
int oracle_bk_dim(GroupTag k, int i)
{
    if (i < 0)
        return 0;
    switch (k) {
    case GroupTag::Pin2:
        return i % 4 == 3 ? 0 : 1;
    case GroupTag::S1:
        return i % 2 == 0 ? 1 : 0;
    default:
        return 1;
    }
}

// Rank of multiplication by the degree-1 generator (q or Q) out of degree i.
int oracle_bk_low_rank(GroupTag k, int i)
{
    if (k == GroupTag::Pin2)
        return i % 4 <= 1 ? 1 : 0;
    if (k == GroupTag::Z4)
        return i % 2 == 0 ? 1 : 0;
    return 0;
}

Outcome ac1()
{
    Outcome o;
    const auto t0 = Clock::now();
    const BorelSuite suite(sphere_complex(0), kAc1MaxDegree);
    for (auto k : kAllGroups) {
        const auto& co = suite.get(k).cohomology();
        const auto& ho = suite.get(k).homology();
        const auto per = periodicity_generator(k);
        const int p = ring_generator_info(per).degree;
        for (int d = 0; d <= kAc1MaxDegree; ++d) {
            if (co.dim(d) != oracle_bk_dim(k, d) || ho.dim(d) != oracle_bk_dim(k, d))
                o.fail(fmt::format("{} dim in degree {}: {} / {}, expected {}", group_name(k), d, co.dim(d),
                                   ho.dim(d), oracle_bk_dim(k, d)));
            if (d + p <= kAc1MaxDegree && rank_of(co, per, d) != co.dim(d))
                o.fail(fmt::format("{} tower breaks in degree {}", group_name(k), d));
        }
        if (k == GroupTag::Pin2 || k == GroupTag::Z4) {
            const auto low = k == GroupTag::Pin2 ? RingGenerator::q : RingGenerator::Q;
            const int nil = k == GroupTag::Pin2 ? 3 : 2;
            for (int d = 0; d + 1 <= kAc1MaxDegree; ++d)
                if (rank_of(co, low, d) != oracle_bk_low_rank(k, d))
                    o.fail(fmt::format("{} low generator rank in degree {}", group_name(k), d));
            for (int d = 0; d + nil <= kAc1MaxDegree; ++d)
                if (!co.power(low, d, nil).is_zero())
                    o.fail(fmt::format("{} nilpotence fails in degree {}", group_name(k), d));
        }
    }
    const double t = seconds_since(t0);
    if (t >= kAc1Seconds)
        o.fail(fmt::format("took {:.2f} s", t));
    if (o.pass)
        o.detail = fmt::format("S0 to degree {} for all four groups in {:.2f} s", kAc1MaxDegree, t);
    return o;
}

// Hand-built model of V8 + V1 + V2 + F_3^2 + F_4 with its q and v actions.
struct ModelModule {
    struct Elem {
        std::string name;
        int degree;
    };
    std::vector<Elem> basis;

    explicit ModelModule(int top)
    {
        for (int k = 0; 4 * k <= top + 12; ++k) {
            basis.push_back({fmt::format("t8v{}", k), 8 + 4 * k});
            basis.push_back({fmt::format("t1v{}", k), 1 + 4 * k});
            basis.push_back({fmt::format("t2v{}", k), 2 + 4 * k});
        }
        basis.push_back({"y3", 3});
        basis.push_back({"y3'", 3});
        basis.push_back({"y4", 4});
    }

    std::vector<std::string> in_degree(int d) const
    {
        std::vector<std::string> out;
        for (const auto& e : basis)
            if (e.degree == d)
                out.push_back(e.name);
        return out;
    }

    static std::vector<std::string> act_v(const std::string& e)
    {
        if (e[0] == 't')
            return {e.substr(0, 3) + std::to_string(std::stoi(e.substr(3)) + 1)};
        return {};
    }

    // q t8 = v^2 t1, q t1 = t2, q t2 = y3, q y3' = y4; q commutes with v.
    static std::vector<std::string> act_q(const std::string& e)
    {
        if (e[0] != 't')
            return e == "y3'" ? std::vector<std::string>{"y4"} : std::vector<std::string>{};
        const int k = std::stoi(e.substr(3));
        if (e.substr(0, 2) == "t8")
            return {fmt::format("t1v{}", k + 2)};
        if (e.substr(0, 2) == "t1")
            return {fmt::format("t2v{}", k)};
        return k == 0 ? std::vector<std::string>{"y3"} : std::vector<std::string>{};
    }

    int dim(int d) const { return static_cast<int>(in_degree(d).size()); }

    int rank(int d, const std::vector<std::function<std::vector<std::string>(const std::string&)>>& ops, int shift) const
    {
        const auto src = in_degree(d);
        const auto dst = in_degree(d + shift);
        gf2::Matrix m(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            std::vector<std::string> cur{src[j]};
            for (const auto& op : ops) {
                std::vector<std::string> next;
                for (const auto& x : cur)
                    for (const auto& y : op(x))
                        next.push_back(y);
                cur = next;
            }
            for (const auto& y : cur)
                for (std::size_t i = 0; i < dst.size(); ++i)
                    if (dst[i] == y)
                        m.flip(i, j);
        }
        return static_cast<int>(gf2::rank(m));
    }
};

Outcome ac2()
{
    Outcome o;
    const auto t0 = Clock::now();
    const ModelModule model(kExampleTop);
    const std::vector<int> listed{0, 1, 1, 2, 1, 1, 1, 0, 1, 1, 1, 0, 1};
    struct Expect {
        SwfComplex c;
        Rational alpha, beta, gamma, delta, delta_bar, delta_under;
    };
    const Expect cases[] = {{example_x1(), 4, 0, 0, 2, 2, 0}, {example_x2(), 4, 0, 0, 3, 3, 0}};
    for (const auto& e : cases) {
        const BorelSuite suite(e.c, default_max_degree(e.c));
        const auto& m = suite.get(GroupTag::Pin2).cohomology();
        for (int d = 0; d <= kExampleTop; ++d) {
            if (m.dim(d) != listed[d] || model.dim(d) != listed[d])
                o.fail(fmt::format("{} dim in degree {}: {}, model {}, listed {}", e.c.name, d, m.dim(d),
                                   model.dim(d), listed[d]));
            const std::pair<const char*, std::pair<int, int>> checks[] = {
                {"q", {rank_of(m, RingGenerator::q, d), model.rank(d, {ModelModule::act_q}, 1)}},
                {"v", {rank_of(m, RingGenerator::v, d), model.rank(d, {ModelModule::act_v}, 4)}},
                {"qv",
                 {static_cast<int>(gf2::rank(m.matrix(RingGenerator::q, d + 4) * m.matrix(RingGenerator::v, d))),
                  model.rank(d, {ModelModule::act_v, ModelModule::act_q}, 5)}},
                {"q^2",
                 {static_cast<int>(gf2::rank(m.power(RingGenerator::q, d, 2))),
                  model.rank(d, {ModelModule::act_q, ModelModule::act_q}, 2)}},
            };
            for (const auto& [name, ranks] : checks)
                if (ranks.first != ranks.second)
                    o.fail(fmt::format("{} rank of {} from degree {}: {}, model {}", e.c.name, name, d, ranks.first,
                                       ranks.second));
        }
        const auto r = manolescu_invariants(StableClass{e.c, 0, 0}, suite);
        if (r.alpha != e.alpha || r.beta != e.beta || r.gamma != e.gamma || r.delta != e.delta ||
            r.delta_bar != e.delta_bar || r.delta_under != e.delta_under)
            o.fail(fmt::format("{} invariants (a, b, g, d, d-bar, d-under) = ({}, {}, {}, {}, {}, {})", e.c.name,
                               format_rational(r.alpha), format_rational(r.beta), format_rational(r.gamma),
                               format_rational(r.delta), format_rational(r.delta_bar),
                               format_rational(r.delta_under)));
    }
    const double t = seconds_since(t0);
    if (t >= kAc2Seconds)
        o.fail(fmt::format("took {:.2f} s", t));
    if (o.pass)
        o.detail = fmt::format("X1 and X2 match the hand-built module and invariants in {:.2f} s", t);
    return o;
}

std::uint64_t fuzz_seed(std::size_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(kFuzzSeed), static_cast<std::uint32_t>(kFuzzSeed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

struct Population {
    std::vector<StableClass> classes;
    std::vector<Analysis> analyses;
    double seconds = 0;
    std::string error;
};

Population analyze_population()
{
    Population p;
    for (const auto& e : builtin_corpus())
        p.classes.push_back(e.sc);
    for (int i = 0; i < kFuzzCount; ++i) {
        auto c = random_complex(fuzz_seed(i), kFuzzMaxGens, kFuzzMaxDegree, kFuzzMaxLevel);
        p.classes.push_back(StableClass{std::move(c), 0, 0});
    }
    const auto t0 = Clock::now();
    p.analyses.resize(p.classes.size());
    try {
        parallel_for(p.classes.size(), 0, [&](std::size_t i) { p.analyses[i] = analyze(p.classes[i]); });
    } catch (const std::exception& e) {
        p.error = e.what();
    }
    p.seconds = seconds_since(t0);
    return p;
}

Outcome family_outcome(const Population& p, const std::string& family, std::size_t expected_per_complex)
{
    Outcome o;
    if (!p.error.empty()) {
        o.fail("analysis threw: " + p.error);
        return o;
    }
    std::size_t checked = 0;
    for (const auto& a : p.analyses) {
        const auto vs = select_verdicts(a.verdicts, family);
        if (vs.size() != expected_per_complex)
            o.fail(fmt::format("{}: {} {} verdicts, expected {}", a.sc.complex.name, vs.size(), family,
                               expected_per_complex));
        for (const auto& v : vs) {
            ++checked;
            if (!v.pass)
                o.fail(fmt::format("{}: {} failed: {}", a.sc.complex.name, v.name, v.detail));
        }
    }
    if (o.pass)
        o.detail = fmt::format("{} verdicts on {} complexes", checked, p.analyses.size());
    return o;
}

const Analysis* find_analysis(const Population& p, const std::string& name)
{
    for (const auto& a : p.analyses)
        if (a.sc.complex.name == name)
            return &a;
    return nullptr;
}

Outcome ac3(const Population& p)
{
    auto o = family_outcome(p, "invariants", 7);
    const auto* x1 = find_analysis(p, "X1");
    const auto* x2 = find_analysis(p, "X2");
    if (!x1 || !x2)
        o.fail("X1 or X2 missing");
    else {
        if (x1->invariants.delta != x1->invariants.delta_G)
            o.fail("X1 does not realize delta = delta_G");
        if (x2->invariants.delta != x2->invariants.delta_G + 1)
            o.fail("X2 does not realize delta = delta_G + 1");
    }
    if (p.seconds >= kAc3Seconds)
        o.fail(fmt::format("took {:.2f} s", p.seconds));
    if (o.pass)
        o.detail += fmt::format(", {} fuzzed, {:.2f} s", kFuzzCount, p.seconds);
    return o;
}

// Independent of the localization verdict: dims agree and the inclusion has
// full rank in every degree from top cell + 1 + dim(G/K) to the window top.
Outcome ac4(const Population& p)
{
    auto o = family_outcome(p, "localization", 4);
    for (std::size_t i = 0; i < p.classes.size() && o.pass && p.error.empty(); ++i) {
        const auto& c = p.classes[i].complex;
        const BorelSuite suite(c, p.analyses[i].max_degree);
        for (auto k : kAllGroups) {
            const auto incl = suite.fixed_inclusion(k);
            const int from = (c.top_free_degree() < 0 ? 0 : c.top_free_degree() + 1 + coset_dimension(k));
            for (int d = from; d <= suite.max_degree(); ++d) {
                const int dim_x = suite.get(k).cohomology().dim(d);
                const int dim_f = incl.fixed_dims[d];
                if (dim_x != dim_f || static_cast<int>(gf2::rank(incl.cohomology[d])) != dim_x) {
                    o.fail(fmt::format("{} {}: inclusion not an isomorphism in degree {}", c.name, group_name(k), d));
                    break;
                }
            }
        }
    }
    return o;
}

Outcome ac5(const Population& p) { return family_outcome(p, "gysin", 12); }

Outcome ac6()
{
    Outcome o;
    std::size_t checked = 0;
    for (const auto& e : builtin_corpus()) {
        const auto& c = e.sc.complex;
        const auto s = suspend_rtilde(c);
        const int hi = default_max_degree(c);
        const BorelSuite base(c, hi), up(s, hi + 1);
        for (auto k : kAllGroups)
            for (int d = 0; d <= hi; ++d) {
                ++checked;
                if (up.get(k).cohomology().dim(d + 1) != base.get(k).cohomology().dim(d) ||
                    up.get(k).homology().dim(d + 1) != base.get(k).homology().dim(d))
                    o.fail(fmt::format("{} {}: suspension does not shift degree {}", c.name, group_name(k), d));
            }
        if (up.get(GroupTag::Pin2).cohomology().dim(0) != 0)
            o.fail(c.name + ": suspension has a class in degree 0");

        const auto r0 = manolescu_invariants(StableClass{c, 0, 0}, base);
        for (const auto& [m, n] : std::vector<std::pair<std::int64_t, Rational>>{
                 {1, Rational(0)}, {0, Rational(1, 4)}, {3, Rational(-1, 2)}, {-2, Rational(3, 4)}}) {
            const auto r = manolescu_invariants(StableClass{c, m, n}, base);
            const Rational shift = Rational(-m, 2) - 2 * n;
            const std::pair<Rational, Rational> pairs[] = {
                {r.alpha, r0.alpha},         {r.beta, r0.beta},
                {r.gamma, r0.gamma},         {r.delta, r0.delta},
                {r.delta_bar, r0.delta_bar}, {r.delta_under, r0.delta_under},
                {r.delta_G, r0.delta_G},     {r.delta_G_under, r0.delta_G_under},
                {r.delta_G_bar, r0.delta_G_bar}, {r.delta_Z2, r0.delta_Z2},
                {r.delta_Z4, r0.delta_Z4}};
            for (const auto& [got, before] : pairs)
                if (got != before + shift)
                    o.fail(fmt::format("{} (m = {}, n = {}): an invariant moved by {} instead of {}", c.name, m,
                                       format_rational(n), format_rational(got - before), format_rational(shift)));
            for (const auto& f : r.froyshov)
                if (f.value != r0.froyshov_value(f.group, f.e) + shift)
                    o.fail(fmt::format("{}: fixed-point invariant ({}, {}) did not shift", c.name,
                                       group_name(f.group), f.e));
        }
    }
    if (o.pass)
        o.detail = fmt::format("{} degree checks on {} corpus complexes; four (m, n) shifts each", checked,
                               builtin_corpus().size());
    return o;
}

Outcome ac7(const Population& p)
{
    Outcome o;
    // Homogeneous elements of H*(BQ_4m) for m even, by the Pin(2) element they reduce to.
    const std::map<std::string, std::string> reduces_to{{"1", "1"},   {"r", "1"},      {"q+r", "1"}, {"q", "q"},
                                                        {"qr", "q"},  {"q^2+qr", "q"}, {"q^2", "q^2"},
                                                        {"q^2r", "q^2"}};
    std::size_t checked = 0;
    for (std::size_t i = 0; i < builtin_corpus().size() && p.error.empty(); ++i) {
        const auto& r = p.analyses[i].invariants;
        const std::map<std::string, Rational> pin2{{"1", r.alpha}, {"q", r.beta}, {"q^2", r.gamma}};
        if (q4m_elements(2).size() != reduces_to.size())
            o.fail("m even does not list eight elements");
        for (int m : {2, 4, 6}) {
            for (const auto& e : q4m_elements(m)) {
                ++checked;
                const auto it = reduces_to.find(e);
                if (it == reduces_to.end()) {
                    o.fail("unexpected element " + e);
                    continue;
                }
                if (q4m_invariants(r, m, e) != pin2.at(it->second))
                    o.fail(fmt::format("{}: Q_{} element {} gives {}", r.complex, 4 * m, e,
                                       format_rational(q4m_invariants(r, m, e))));
            }
        }
        for (int m : {3, 5, 7}) {
            for (const auto& [e, z4e] : std::vector<std::pair<std::string, std::string>>{{"1", "1"}, {"Q", "Q"}}) {
                ++checked;
                const auto want = e == "1" ? r.delta_bar : r.delta_under;
                if (q4m_invariants(r, m, e) != want || q4m_invariants(r, m, e) != r.froyshov_value(GroupTag::Z4, z4e))
                    o.fail(fmt::format("{}: Q_{} element {} disagrees with the Z/4 invariants", r.complex, 4 * m, e));
            }
        }
    }
    if (!p.error.empty())
        o.fail("analysis threw: " + p.error);
    if (o.pass)
        o.detail = fmt::format("{} lookups on {} corpus complexes", checked, builtin_corpus().size());
    return o;
}

}  // namespace

int main()
{
    bool all = true;
    auto report = [&](const char* id, const Outcome& o) {
        std::printf("%s %s: %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    };
    auto guarded = [](const std::function<Outcome()>& fn) {
        try {
            return fn();
        } catch (const std::exception& e) {
            Outcome o;
            o.fail(std::string("threw: ") + e.what());
            return o;
        }
    };
    report("AC1", guarded(ac1));
    report("AC2", guarded(ac2));
    const auto population = analyze_population();
    report("AC3", guarded([&] { return ac3(population); }));
    report("AC4", guarded([&] { return ac4(population); }));
    report("AC5", guarded([&] { return ac5(population); }));
    report("AC6", guarded(ac6));
    report("AC7", guarded([&] { return ac7(population); }));
    return all ? 0 : 1;
}
