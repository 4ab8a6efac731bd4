#include "swf/invariants.hpp"

#include <stdexcept>

#include <fmt/core.h>

namespace swf {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

struct ElementInfo {
    GroupTag group;
    std::string_view name;
    int degree;
};

constexpr ElementInfo kElements[] = {
    {GroupTag::Pin2, "1", 0}, {GroupTag::Pin2, "q", 1}, {GroupTag::Pin2, "q^2", 2},
    {GroupTag::Z4, "1", 0},   {GroupTag::Z4, "Q", 1},   {GroupTag::S1, "1", 0},
    {GroupTag::Z2, "1", 0},
};

int element_degree(GroupTag h, const std::string& e)
{
    for (const auto& el : kElements)
        if (el.group == h && el.name == e)
            return el.degree;
    throw std::invalid_argument(fmt::format(
        "'{}' is not a nonzero homogeneous element of H*(B{}) modulo its periodicity generator", e, group_name(h)));
}

ClassWitness adjusted(ClassWitness w, int by)
{
    w.value -= by;
    return w;
}

FroyshovEntry froyshov_from_inclusion(const StableClass& sc, const BorelSuite& suite, const FixedInclusionMap& incl,
                                      const std::string& e)
{
    const GroupTag h = incl.group;
    const int deg_e = element_degree(h, e);
    const int p = ring_generator_info(periodicity_generator(h)).degree;
    const int s = sc.complex.level;
    for (int r = 0; r <= suite.max_degree(); ++r) {
        if (mod(r - s - deg_e, p) != 0)
            continue;
        const auto& m = incl.cohomology[r];
        for (std::size_t i = 0; i < m.cols(); ++i) {
            if (m.column(i).is_zero())
                continue;
            ClassWitness w{r, r - deg_e, gf2::Vector::unit(m.cols(), i)};
            return {h, e, shifted(sc, w.value), w};
        }
    }
    throw std::logic_error(fmt::format("no class restricting to {} {} found below degree {}", group_name(h), e,
                                       suite.max_degree()));
}

std::string fmt_rat(const Rational& r) { return format_rational(r); }

}  // namespace

bool is_nontorsion(const GradedModule& m, int sigma, int degree, const gf2::Vector& x)
{
    const auto per = periodicity_generator(m.group);
    const int p = ring_generator_info(per).degree;
    const int l = degree >= sigma ? 0 : (sigma - degree + p - 1) / p;
    if (degree + l * p > m.hi)
        throw std::out_of_range(fmt::format("window up to degree {} is too small to certify a class in degree {}",
                                            m.hi, degree));
    return !m.power(per, degree, l).apply(x).is_zero();
}

ClassWitness min_nontorsion(const GradedModule& m, int sigma, const TowerQuery& query)
{
    for (int r = m.lo; r <= m.hi; ++r) {
        if (mod(r - query.residue, query.modulus) != 0)
            continue;
        std::vector<gf2::Vector> candidates;
        if (query.kernel) {
            candidates = gf2::kernel_basis(m.power(*query.kernel, r, query.kernel_power));
        } else {
            for (int i = 0; i < m.dim(r); ++i)
                candidates.push_back(gf2::Vector::unit(static_cast<std::size_t>(m.dim(r)), i));
        }
        for (const auto& x : candidates)
            if (is_nontorsion(m, sigma, r, x))
                return {r, r, x};
    }
    throw std::logic_error("no nontorsion class in the window");
}

AbcValues abc(const GradedModule& pin2, int level, int sigma)
{
    return {min_nontorsion(pin2, sigma, {level, 4, {}, 1}),
            adjusted(min_nontorsion(pin2, sigma, {level + 1, 4, {}, 1}), 1),
            adjusted(min_nontorsion(pin2, sigma, {level + 2, 4, {}, 1}), 2)};
}

ClassWitness d_invariant(const GradedModule& s1, int sigma) { return min_nontorsion(s1, sigma, {0, 1, {}, 1}); }

std::pair<ClassWitness, ClassWitness> dbar_dunder(const GradedModule& z4, int level, int sigma)
{
    return {min_nontorsion(z4, sigma, {level, 2, {}, 1}),
            adjusted(min_nontorsion(z4, sigma, {level + 1, 2, {}, 1}), 1)};
}

const std::vector<std::string>& froyshov_elements(GroupTag h)
{
    static const std::vector<std::string> pin2{"1", "q", "q^2"};
    static const std::vector<std::string> z4{"1", "Q"};
    static const std::vector<std::string> one{"1"};
    switch (h) {
    case GroupTag::Pin2:
        return pin2;
    case GroupTag::Z4:
        return z4;
    default:
        return one;
    }
}

Rational shifted(const StableClass& sc, int raw)
{
    return Rational(raw, 2) - Rational(sc.m, 2) - 2 * sc.n;
}

const ClassWitness& InvariantReport::witness(const std::string& name) const
{
    for (const auto& w : witnesses)
        if (w.name == name)
            return w.witness;
    throw std::out_of_range("no witness named " + name);
}

Rational InvariantReport::froyshov_value(GroupTag h, const std::string& e) const
{
    for (const auto& f : froyshov)
        if (f.group == h && f.e == e)
            return f.value;
    throw std::out_of_range(fmt::format("no entry for ({}, {})", group_name(h), e));
}

FroyshovEntry froyshov_general(const StableClass& sc, const BorelSuite& suite, GroupTag h, const std::string& e)
{
    element_degree(h, e);
    return froyshov_from_inclusion(sc, suite, suite.fixed_inclusion(h), e);
}

InvariantReport manolescu_invariants(const StableClass& sc, const BorelSuite& suite)
{
    InvariantReport r;
    r.complex = sc.complex.name;
    r.m = sc.m;
    r.n = sc.n;
    r.mu = sc.mu();
    const int s = sc.complex.level;
    auto sigma = [&](GroupTag k) { return suite.localization_bound(k); };
    const auto& pin2 = suite.get(GroupTag::Pin2).cohomology();
    const auto& z4 = suite.get(GroupTag::Z4).cohomology();
    const auto& s1 = suite.get(GroupTag::S1).cohomology();
    const auto& z2 = suite.get(GroupTag::Z2).cohomology();

    auto record = [&](const std::string& name, const ClassWitness& w) {
        r.witnesses.push_back({name, w});
        return Rational(w.value);
    };
    const auto t = abc(pin2, s, sigma(GroupTag::Pin2));
    r.a = record("a", t.a);
    r.b = record("b", t.b);
    r.c = record("c", t.c);
    r.d = record("d", d_invariant(s1, sigma(GroupTag::S1)));
    const auto [dbar, dunder] = dbar_dunder(z4, s, sigma(GroupTag::Z4));
    r.d_bar = record("d_bar", dbar);
    r.d_under = record("d_under", dunder);

    auto half = [&](const Rational& raw) { return raw / 2 - Rational(sc.m, 2) - 2 * sc.n; };
    r.alpha = half(r.a);
    r.beta = half(r.b);
    r.gamma = half(r.c);
    r.delta = half(r.d);
    r.delta_bar = half(r.d_bar);
    r.delta_under = half(r.d_under);

    const int sg = sigma(GroupTag::Pin2);
    r.delta_G = half(record("delta_G", adjusted(min_nontorsion(pin2, sg, {s + 2, 4, RingGenerator::q, 1}), 2)));
    r.delta_G_under =
        half(record("delta_G_under", adjusted(min_nontorsion(pin2, sg, {s + 2, 4, RingGenerator::q, 2}), 2)));
    r.delta_G_bar =
        half(record("delta_G_bar", adjusted(min_nontorsion(pin2, sg, {s + 1, 4, RingGenerator::q, 2}), 1)));
    r.delta_Z2 = half(record("delta_Z2", min_nontorsion(z2, sigma(GroupTag::Z2), {0, 1, {}, 1})));
    r.delta_Z4 = half(record(
        "delta_Z4", adjusted(min_nontorsion(z4, sigma(GroupTag::Z4), {s + 1, 2, RingGenerator::Q, 1}), 1)));

    for (auto h : {GroupTag::Pin2, GroupTag::Z4, GroupTag::S1, GroupTag::Z2}) {
        const auto incl = suite.fixed_inclusion(h);
        for (const auto& e : froyshov_elements(h))
            r.froyshov.push_back(froyshov_from_inclusion(sc, suite, incl, e));
    }
    return r;
}

InvariantReport manolescu_invariants(const StableClass& sc, int max_degree)
{
    return manolescu_invariants(sc, BorelSuite(sc.complex, max_degree));
}

const std::vector<std::string>& q4m_elements(int m)
{
    static const std::vector<std::string> even{"1", "q", "q+r", "r", "q^2", "q^2+qr", "qr", "q^2r"};
    static const std::vector<std::string> odd{"1", "Q"};
    return m % 2 == 0 ? even : odd;
}

Rational q4m_invariants(const InvariantReport& r, int m, const std::string& e)
{
    if (m < 2)
        throw std::invalid_argument(fmt::format("Q_4m needs m >= 2, got {}", m));
    if (m % 2 == 0) {
        if (e == "1" || e == "r" || e == "q+r")
            return r.alpha;
        if (e == "q" || e == "qr" || e == "q^2+qr" || e == "qr+q^2")
            return r.beta;
        if (e == "q^2" || e == "q^2r")
            return r.gamma;
    } else {
        if (e == "1")
            return r.delta_bar;
        if (e == "Q")
            return r.delta_under;
    }
    throw std::invalid_argument(fmt::format("'{}' is not a homogeneous element for Q_{}", e, 4 * m));
}

std::vector<Verdict> check_theorems(const InvariantReport& r)
{
    std::vector<Verdict> out;
    auto add = [&](std::string name, bool pass, const std::string& witness, std::string detail) {
        const auto& w = r.witness(witness);
        out.push_back({std::move(name), pass, w.degree, w.vector.support(), std::move(detail)});
    };
    auto one_of = [](const Rational& x, const Rational& base) { return x == base || x == base + 1; };

    add("z4_kernel_formula", r.delta == r.delta_Z4, "delta_Z4",
        fmt::format("delta = {}, Q-kernel formula = {}", fmt_rat(r.delta), fmt_rat(r.delta_Z4)));
    add("delta_G_dichotomy", one_of(r.delta, r.delta_G), "delta_G",
        fmt::format("delta = {}, delta_G = {}", fmt_rat(r.delta), fmt_rat(r.delta_G)));
    add("delta_G_bar_under_dichotomy",
        one_of(r.delta_under, r.delta_G_under) && one_of(r.delta_bar, r.delta_G_bar), "delta_G_under",
        fmt::format("delta_under = {}, delta_G_under = {}, delta_bar = {}, delta_G_bar = {}", fmt_rat(r.delta_under),
                    fmt_rat(r.delta_G_under), fmt_rat(r.delta_bar), fmt_rat(r.delta_G_bar)));
    add("inequality_chain",
        r.alpha >= r.delta_bar && r.delta_bar >= r.beta && r.beta >= r.delta_under && r.delta_under >= r.gamma,
        "d_bar",
        fmt::format("alpha = {}, delta_bar = {}, beta = {}, delta_under = {}, gamma = {}", fmt_rat(r.alpha),
                    fmt_rat(r.delta_bar), fmt_rat(r.beta), fmt_rat(r.delta_under), fmt_rat(r.gamma)));
    add("z2_equals_delta", r.delta_Z2 == r.delta, "delta_Z2",
        fmt::format("delta_Z2 = {}, delta = {}", fmt_rat(r.delta_Z2), fmt_rat(r.delta)));

    const auto f = [&](GroupTag h, const char* e) { return r.froyshov_value(h, e); };
    const bool mono = f(GroupTag::Pin2, "1") >= f(GroupTag::Pin2, "q") &&
                      f(GroupTag::Pin2, "q") >= f(GroupTag::Pin2, "q^2") &&
                      f(GroupTag::Z4, "1") >= f(GroupTag::Z4, "Q");
    {
        std::string detail;
        for (const auto& e : r.froyshov)
            detail += fmt::format("{}({}, {}) = {}", detail.empty() ? "" : ", ", group_name(e.group), e.e,
                                  fmt_rat(e.value));
        out.push_back({"divisibility_monotonicity", mono, -1, {}, detail});
    }

    struct Pair {
        const char* name;
        Rational tower;
        GroupTag h;
        const char* e;
    };
    const Pair pairs[] = {
        {"alpha", r.alpha, GroupTag::Pin2, "1"},        {"beta", r.beta, GroupTag::Pin2, "q"},
        {"gamma", r.gamma, GroupTag::Pin2, "q^2"},      {"delta_bar", r.delta_bar, GroupTag::Z4, "1"},
        {"delta_under", r.delta_under, GroupTag::Z4, "Q"}, {"delta", r.delta, GroupTag::S1, "1"},
        {"delta_Z2", r.delta_Z2, GroupTag::Z2, "1"},
    };
    Verdict agree{"tower_vs_fixed_point", true, -1, {}, "all agree"};
    for (const auto& p : pairs) {
        const auto via_fixed = f(p.h, p.e);
        if (p.tower == via_fixed)
            continue;
        if (agree.pass) {
            agree.pass = false;
            agree.detail.clear();
        }
        agree.detail += fmt::format("{}{}: tower {} vs fixed point {}", agree.detail.empty() ? "" : "; ", p.name,
                                    fmt_rat(p.tower), fmt_rat(via_fixed));
    }
    out.push_back(std::move(agree));
    return out;
}

}  // namespace swf
