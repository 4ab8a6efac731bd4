#include "swf/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <fmt/core.h>

namespace swf {

namespace {

using nlohmann::ordered_json;

Term term(std::uint8_t mask, Target t) { return {AlgebraElement::from_mask(mask), t}; }

// Masks: bit 4a + b is s^a j^b.
constexpr std::uint8_t kOne = 0x01;
constexpr std::uint8_t kOnePlusJ = 0x03;
constexpr std::uint8_t kS = 0x10;
constexpr std::uint8_t kSNorm = 0xF0;         // s (1 + j + j^2 + j^3)
constexpr std::uint8_t kSOnePlusJ2 = 0x50;    // s (1 + j^2)

struct NamedInvariant {
    const char* name;
    Rational InvariantReport::*field;
};

constexpr NamedInvariant kInvariants[] = {
    {"a", &InvariantReport::a},
    {"b", &InvariantReport::b},
    {"c", &InvariantReport::c},
    {"d", &InvariantReport::d},
    {"d_bar", &InvariantReport::d_bar},
    {"d_under", &InvariantReport::d_under},
    {"alpha", &InvariantReport::alpha},
    {"beta", &InvariantReport::beta},
    {"gamma", &InvariantReport::gamma},
    {"delta", &InvariantReport::delta},
    {"delta_bar", &InvariantReport::delta_bar},
    {"delta_under", &InvariantReport::delta_under},
    {"delta_G", &InvariantReport::delta_G},
    {"delta_G_under", &InvariantReport::delta_G_under},
    {"delta_G_bar", &InvariantReport::delta_G_bar},
    {"delta_Z2", &InvariantReport::delta_Z2},
    {"delta_Z4", &InvariantReport::delta_Z4},
};

Rational invariant_value(const InvariantReport& r, const std::string& name)
{
    for (const auto& inv : kInvariants)
        if (name == inv.name)
            return r.*inv.field;
    throw std::invalid_argument("unknown invariant " + name);
}

std::string verdict_family(const std::string& name)
{
    for (const char* prefix : {"localization", "gysin", "expected"})
        if (name.rfind(std::string(prefix) + "_", 0) == 0)
            return prefix;
    return "invariants";
}

std::vector<int> classifying_dims(GroupTag k, int level, int hi)
{
    std::vector<int> out;
    for (int d = 0; d <= hi; ++d)
        out.push_back(classifying_dim(k, d - level));
    return out;
}

CorpusEntry sphere_entry(int level)
{
    CorpusEntry e{sphere_complex(level).name, {sphere_complex(level), 0, Rational(0)}, {}, {}};
    for (auto k : kAllGroups)
        e.expected_dims[k] = classifying_dims(k, level, 24);
    for (const char* name : {"alpha", "beta", "gamma", "delta", "delta_bar", "delta_under"})
        e.expected_invariants.emplace_back(name, Rational(level, 2));
    return e;
}

CorpusEntry example_entry(SwfComplex c, int delta)
{
    CorpusEntry e{c.name, {std::move(c), 0, Rational(0)}, {}, {}};
    e.expected_dims[GroupTag::Pin2] = {0, 1, 1, 2, 1, 1, 1, 0, 1, 1, 1, 0, 1};
    e.expected_invariants = {{"alpha", Rational(4)},     {"beta", Rational(0)},      {"gamma", Rational(0)},
                             {"delta", Rational(delta)}, {"delta_bar", Rational(delta)}, {"delta_under", Rational(0)}};
    return e;
}

}  // namespace

SwfComplex example_x1()
{
    SwfComplex c;
    c.name = "X1";
    c.generators = {{"x1", 1}, {"x3", 3}, {"y3", 3}, {"x4", 4}, {"x5", 5}};
    c.differential = {
        {term(kOne, Target::fixed(0))},
        {term(kSNorm, Target::free(0))},
        {term(kSOnePlusJ2, Target::free(0))},
        {term(kOnePlusJ, Target::free(1))},
        {term(kOnePlusJ, Target::free(3)), term(kS, Target::free(1))},
    };
    return c;
}

SwfComplex example_x2()
{
    SwfComplex c;
    c.name = "X2";
    c.generators = {{"x1", 1}, {"x3", 3}, {"y3", 3}, {"x4", 4}, {"y5", 5}};
    c.differential = {
        {term(kOne, Target::fixed(0))},
        {term(kSNorm, Target::free(0))},
        {term(kSOnePlusJ2, Target::free(0))},
        {term(kOnePlusJ, Target::free(1))},
        {term(kSOnePlusJ2, Target::free(2))},
    };
    return c;
}

const std::vector<CorpusEntry>& builtin_corpus()
{
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> out;
        for (int s = 0; s <= 4; ++s)
            out.push_back(sphere_entry(s));
        out.push_back(example_entry(example_x1(), 2));
        out.push_back(example_entry(example_x2(), 3));
        return out;
    }();
    return corpus;
}

const CorpusEntry* find_corpus_entry(const std::string& name)
{
    for (const auto& e : builtin_corpus())
        if (e.name == name)
            return &e;
    return nullptr;
}

const GradedModule& Analysis::module(GroupTag k) const { return modules[static_cast<std::size_t>(k)]; }

Analysis analyze(const StableClass& sc, int max_degree)
{
    require_valid(sc.complex);
    const std::int64_t shift = sc.grading_shift();
    Analysis a;
    a.sc = sc;
    a.max_degree = max_degree < 0 ? default_max_degree(sc.complex) : max_degree;
    const BorelSuite suite(sc.complex, a.max_degree);
    for (auto k : kAllGroups) {
        auto m = suite.get(k).cohomology();
        m.grading_offset = Rational(-shift);
        a.modules.push_back(std::move(m));
    }
    for (auto k : kAllGroups) {
        auto loc = suite.localization(k);
        a.verdicts.push_back(
            {fmt::format("localization_{}", group_name(k)), loc.pass, loc.first_iso_degree, {}, loc.detail});
        a.localization.push_back(std::move(loc));
    }
    for (int type = 1; type <= 4; ++type)
        for (auto& v : verify_exactness(build_gysin(suite, type)))
            a.verdicts.push_back(std::move(v));
    a.invariants = manolescu_invariants(sc, suite);
    for (auto& v : check_theorems(a.invariants))
        a.verdicts.push_back(std::move(v));
    return a;
}

const std::vector<std::string>& verdict_families()
{
    static const std::vector<std::string> families{"invariants", "localization", "gysin", "expected"};
    return families;
}

std::vector<Verdict> select_verdicts(const std::vector<Verdict>& all, const std::string& selection)
{
    if (selection.empty() || selection == "all")
        return all;
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= selection.size()) {
        const auto comma = selection.find(',', start);
        const auto end = comma == std::string::npos ? selection.size() : comma;
        if (end > start)
            items.push_back(selection.substr(start, end - start));
        start = end + 1;
    }
    std::vector<bool> keep(all.size(), false);
    for (const auto& item : items) {
        bool known = false;
        const bool family =
            std::find(verdict_families().begin(), verdict_families().end(), item) != verdict_families().end();
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((family && verdict_family(all[i].name) == item) || all[i].name == item) {
                keep[i] = true;
                known = true;
            }
        if (!known && !family)
            throw std::invalid_argument(fmt::format("unknown verdict or family '{}'", item));
    }
    std::vector<Verdict> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (keep[i])
            out.push_back(all[i]);
    return out;
}

std::vector<Verdict> check_expectations(const CorpusEntry& entry, const Analysis& a)
{
    std::vector<Verdict> out;
    Verdict dims{"expected_dims", true, -1, {}, "all listed dimensions match"};
    for (const auto& [k, expected] : entry.expected_dims) {
        const auto& m = a.module(k);
        for (int d = 0; d < static_cast<int>(expected.size()) && d <= m.hi; ++d)
            if (m.dim(d) != expected[d]) {
                dims = {dims.name, false, d, {},
                        fmt::format("{} in degree {}: got {}, expected {}", group_name(k), d, m.dim(d), expected[d])};
                break;
            }
        if (!dims.pass)
            break;
    }
    out.push_back(std::move(dims));

    Verdict inv{"expected_invariants", true, -1, {}, ""};
    for (const auto& [name, value] : entry.expected_invariants) {
        const auto got = invariant_value(a.invariants, name);
        if (got != value) {
            inv.pass = false;
            inv.detail += fmt::format("{}{} = {}, expected {}", inv.detail.empty() ? "" : "; ", name,
                                      format_rational(got), format_rational(value));
        }
    }
    if (inv.pass)
        inv.detail = "all listed invariants match";
    out.push_back(std::move(inv));
    return out;
}

ordered_json verdict_json(const Verdict& v)
{
    ordered_json j;
    j["name"] = v.name;
    j["pass"] = v.pass;
    j["witness_degree"] = v.witness_degree < 0 ? ordered_json(nullptr) : ordered_json(v.witness_degree);
    j["witness"] = v.witness;
    j["detail"] = v.detail;
    return j;
}

ordered_json module_json(const GradedModule& m)
{
    ordered_json j;
    j["group"] = std::string(group_name(m.group));
    j["grading"] = m.cohomological ? "cohomology" : "homology";
    j["grading_offset"] = format_rational(m.grading_offset);
    j["lo"] = m.lo;
    j["hi"] = m.hi;
    j["dims"] = m.dims;
    ordered_json ops = ordered_json::array();
    for (const auto& op : m.operators) {
        ordered_json o;
        o["name"] = op.name;
        o["degree"] = op.degree;
        ordered_json ranks = ordered_json::array();
        for (int d = m.lo; d <= m.hi; ++d) {
            const int t = m.cohomological ? d + op.degree : d - op.degree;
            if (t > m.hi)
                ranks.push_back(nullptr);
            else
                ranks.push_back(gf2::rank(m.matrix(op.tag, d)));
        }
        o["ranks"] = std::move(ranks);
        ops.push_back(std::move(o));
    }
    j["operators"] = std::move(ops);
    j["stabilization_degree"] = m.stabilization_degree;
    j["period"] = m.period;
    j["stabilized"] = m.stabilized;
    return j;
}

ordered_json invariants_json(const InvariantReport& r)
{
    ordered_json j;
    j["mu"] = format_rational(r.mu);
    for (const auto& inv : kInvariants)
        j[inv.name] = format_rational(r.*inv.field);
    ordered_json table = ordered_json::array();
    for (const auto& f : r.froyshov) {
        ordered_json e;
        e["group"] = std::string(group_name(f.group));
        e["e"] = f.e;
        e["value"] = format_rational(f.value);
        e["witness_degree"] = f.witness.degree;
        table.push_back(std::move(e));
    }
    j["froyshov"] = std::move(table);
    ordered_json q4m;
    for (int m : {2, 3}) {
        ordered_json row;
        for (const auto& e : q4m_elements(m))
            row[e] = format_rational(q4m_invariants(r, m, e));
        q4m[m % 2 == 0 ? "m_even" : "m_odd"] = std::move(row);
    }
    j["q4m"] = std::move(q4m);
    return j;
}

ordered_json report_json(const Analysis& a)
{
    ordered_json j;
    ordered_json c;
    c["name"] = a.sc.complex.name;
    c["level"] = a.sc.complex.level;
    c["m"] = a.sc.m;
    c["n"] = format_rational(a.sc.n);
    c["max_degree"] = a.max_degree;
    j["complex"] = std::move(c);
    ordered_json mods;
    for (const auto& m : a.modules)
        mods[std::string(group_name(m.group))] = module_json(m);
    j["modules"] = std::move(mods);
    j["invariants"] = invariants_json(a.invariants);
    ordered_json vs = ordered_json::array();
    for (const auto& v : a.verdicts)
        vs.push_back(verdict_json(v));
    j["verdicts"] = std::move(vs);
    return j;
}

std::string module_text(const std::string& complex, const GradedModule& m)
{
    std::string out = fmt::format("{} Borel {} of {} (degrees shifted by {})\n", group_name(m.group),
                                  m.cohomological ? "cohomology" : "homology", complex,
                                  format_rational(m.grading_offset));
    out += fmt::format("{:>5} {:>5}", "deg", "dim");
    for (const auto& op : m.operators)
        out += fmt::format(" {:>5}", "rk " + op.name);
    out += "\n";
    for (int d = m.lo; d <= m.hi; ++d) {
        out += fmt::format("{:>5} {:>5}", d, m.dim(d));
        for (const auto& op : m.operators) {
            const int t = m.cohomological ? d + op.degree : d - op.degree;
            out += t > m.hi ? fmt::format(" {:>5}", "-") : fmt::format(" {:>5}", gf2::rank(m.matrix(op.tag, d)));
        }
        out += "\n";
    }
    out += fmt::format("periodic from degree {} with period {}{}\n", m.stabilization_degree, m.period,
                       m.stabilized ? "" : " (not confirmed in window)");
    return out;
}

std::string invariants_text(const InvariantReport& r)
{
    std::string out = fmt::format("{} (m = {}, n = {}), mu = {}\n", r.complex, r.m, format_rational(r.n),
                                  format_rational(r.mu));
    for (const auto& inv : kInvariants)
        out += fmt::format("  {:<14} {}\n", inv.name, format_rational(r.*inv.field));
    out += "  fixed-point invariants:\n";
    for (const auto& f : r.froyshov)
        out += fmt::format("    ({}, {}) {}\n", group_name(f.group), f.e, format_rational(f.value));
    return out;
}

std::string verdicts_text(const std::vector<Verdict>& vs)
{
    std::string out;
    for (const auto& v : vs)
        out += fmt::format("{} {}: {}\n", v.pass ? "PASS" : "FAIL", v.name, v.detail);
    return out;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn)
{
    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace swf
