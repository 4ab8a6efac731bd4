#include "swf/group_algebra.hpp"

#include <stdexcept>

#include <fmt/core.h>

namespace swf {

namespace {

int group_slot(GroupTag g) { return static_cast<int>(g); }

std::uint8_t basis_mask(GroupTag h)
{
    std::uint8_t mask = 0;
    for (const auto& m : subalgebra_basis(h))
        mask |= static_cast<std::uint8_t>(1U << m.index());
    return mask;
}

struct SplitTables {
    std::array<std::array<MonomialSplit, 8>, 4> table{};

    SplitTables()
    {
        for (auto h : kAllGroups) {
            std::array<bool, 8> seen{};
            const auto& reps = coset_representatives(h);
            for (const auto& b : subalgebra_basis(h)) {
                for (std::size_t r = 0; r < reps.size(); ++r) {
                    const int p = monomial_product(b.index(), reps[r].index());
                    if (p < 0 || seen[p])
                        throw std::logic_error("coset representatives do not give a free basis");
                    seen[p] = true;
                    table[group_slot(h)][p] = {static_cast<int>(r), b.index()};
                }
            }
        }
    }
};

const SplitTables& split_tables()
{
    static const SplitTables tables;
    return tables;
}

}  // namespace

std::string_view group_name(GroupTag g)
{
    switch (g) {
    case GroupTag::Z2:
        return "z2";
    case GroupTag::Z4:
        return "z4";
    case GroupTag::S1:
        return "s1";
    case GroupTag::Pin2:
        return "pin2";
    }
    return "?";
}

std::optional<GroupTag> parse_group(std::string_view name)
{
    for (auto g : kAllGroups)
        if (group_name(g) == name)
            return g;
    return std::nullopt;
}

bool is_subgroup(GroupTag h, GroupTag k)
{
    if (h == k || k == GroupTag::Pin2)
        return true;
    if (h == GroupTag::Z2)
        return k == GroupTag::Z4 || k == GroupTag::S1;
    return false;
}

int monomial_product(int a, int b)
{
    const auto x = Monomial::from_index(a);
    const auto y = Monomial::from_index(b);
    if (y.s == 1) {
        // j^b s = s j^{3b}
        if (x.s == 1)
            return -1;
        return Monomial{1, (3 * x.j + y.j) % 4}.index();
    }
    return Monomial{x.s, (x.j + y.j) % 4}.index();
}

std::uint8_t monomial_boundary(int m)
{
    const auto x = Monomial::from_index(m);
    if (x.s == 0)
        return 0;
    // d(s j^b) = (1 + j^2) j^b
    return static_cast<std::uint8_t>((1U << x.j) | (1U << ((x.j + 2) % 4)));
}

int monomial_inversion(int m)
{
    const auto x = Monomial::from_index(m);
    // j^b -> j^{3b}; s j^b -> j^{3b} s j^2 = s j^{b + 2}
    return Monomial{x.s, x.s == 0 ? (3 * x.j) % 4 : (x.j + 2) % 4}.index();
}

AlgebraElement AlgebraElement::from_mask(std::uint8_t mask, GroupTag group)
{
    AlgebraElement e(group);
    e.mask_ = mask;
    if ((mask & ~basis_mask(group)) != 0)
        throw std::invalid_argument(
            fmt::format("element {} does not lie in the {} algebra", e.to_string(), group_name(group)));
    return e;
}

AlgebraElement AlgebraElement::monomial(int s, int j, GroupTag group)
{
    if (s < 0 || s > 1 || j < 0 || j > 3)
        throw std::invalid_argument(fmt::format("invalid monomial s^{} j^{}", s, j));
    return from_mask(static_cast<std::uint8_t>(1U << (4 * s + j)), group);
}

std::vector<Monomial> AlgebraElement::monomials() const
{
    std::vector<Monomial> out;
    for (int i = 0; i < 8; ++i)
        if ((mask_ >> i) & 1U)
            out.push_back(Monomial::from_index(i));
    return out;
}

AlgebraElement AlgebraElement::part(int degree) const
{
    AlgebraElement e(group_);
    if (degree == 0)
        e.mask_ = mask_ & 0x0F;
    else if (degree == 1)
        e.mask_ = mask_ & 0xF0;
    return e;
}

std::optional<int> AlgebraElement::degree() const
{
    if (mask_ == 0)
        return std::nullopt;
    if ((mask_ & 0xF0) == 0)
        return 0;
    if ((mask_ & 0x0F) == 0)
        return 1;
    return std::nullopt;
}

AlgebraElement AlgebraElement::in_group(GroupTag group) const { return from_mask(mask_, group); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    if (group_ != other.group_)
        throw std::invalid_argument("sum of elements from different group algebras");
    mask_ ^= other.mask_;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.group_ != b.group_)
        throw std::invalid_argument(fmt::format("product of elements from different group algebras ({} and {})",
                                                group_name(a.group_), group_name(b.group_)));
    AlgebraElement out(a.group_);
    for (int x = 0; x < 8; ++x) {
        if (!((a.mask_ >> x) & 1U))
            continue;
        for (int y = 0; y < 8; ++y) {
            if (!((b.mask_ >> y) & 1U))
                continue;
            const int p = monomial_product(x, y);
            if (p >= 0)
                out.mask_ ^= static_cast<std::uint8_t>(1U << p);
        }
    }
    return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

AlgebraElement boundary(const AlgebraElement& x)
{
    std::uint8_t mask = 0;
    for (int i = 0; i < 8; ++i)
        if ((x.mask() >> i) & 1U)
            mask ^= monomial_boundary(i);
    return AlgebraElement::from_mask(mask, x.group());
}

AlgebraElement inversion(const AlgebraElement& x)
{
    std::uint8_t mask = 0;
    for (int i = 0; i < 8; ++i)
        if ((x.mask() >> i) & 1U)
            mask ^= static_cast<std::uint8_t>(1U << monomial_inversion(i));
    return AlgebraElement::from_mask(mask, x.group());
}

std::string AlgebraElement::to_string() const
{
    if (mask_ == 0)
        return "0";
    std::string out;
    for (int i = 7; i >= 0; --i) {
        if (!((mask_ >> i) & 1U))
            continue;
        const auto m = Monomial::from_index(i);
        std::string term;
        if (m.s == 1)
            term = "s";
        if (m.j > 0) {
            if (!term.empty())
                term += ' ';
            term += m.j == 1 ? std::string("j") : fmt::format("j^{}", m.j);
        }
        if (term.empty())
            term = "1";
        if (!out.empty())
            out += " + ";
        out += term;
    }
    return out;
}

const std::vector<Monomial>& subalgebra_basis(GroupTag h)
{
    static const std::vector<Monomial> z2{{0, 0}, {0, 2}};
    static const std::vector<Monomial> z4{{0, 0}, {0, 1}, {0, 2}, {0, 3}};
    static const std::vector<Monomial> s1{{0, 0}, {0, 2}, {1, 0}, {1, 2}};
    static const std::vector<Monomial> pin2{{0, 0}, {0, 1}, {0, 2}, {0, 3},
                                            {1, 0}, {1, 1}, {1, 2}, {1, 3}};
    switch (h) {
    case GroupTag::Z2:
        return z2;
    case GroupTag::Z4:
        return z4;
    case GroupTag::S1:
        return s1;
    case GroupTag::Pin2:
        return pin2;
    }
    throw std::invalid_argument("unknown group");
}

const std::vector<Monomial>& coset_representatives(GroupTag h)
{
    static const std::vector<Monomial> z2{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    static const std::vector<Monomial> z4{{0, 0}, {1, 0}};
    static const std::vector<Monomial> s1{{0, 0}, {0, 1}};
    static const std::vector<Monomial> pin2{{0, 0}};
    switch (h) {
    case GroupTag::Z2:
        return z2;
    case GroupTag::Z4:
        return z4;
    case GroupTag::S1:
        return s1;
    case GroupTag::Pin2:
        return pin2;
    }
    throw std::invalid_argument("unknown group");
}

bool in_subalgebra(const AlgebraElement& x, GroupTag h) { return (x.mask() & ~basis_mask(h)) == 0; }

MonomialSplit split_monomial(int m, GroupTag h) { return split_tables().table[group_slot(h)][m]; }

CosetDecomposition decompose_over(const AlgebraElement& x, GroupTag h)
{
    if (x.group() != GroupTag::Pin2 && !is_subgroup(x.group(), GroupTag::Pin2))
        throw std::invalid_argument("decompose_over: unknown group");
    const auto& reps = coset_representatives(h);
    std::vector<std::uint8_t> masks(reps.size(), 0);
    for (int i = 0; i < 8; ++i) {
        if (!((x.mask() >> i) & 1U))
            continue;
        const auto sp = split_monomial(i, h);
        masks[sp.rep] ^= static_cast<std::uint8_t>(1U << sp.coefficient);
    }
    CosetDecomposition d{h, {}};
    for (auto m : masks)
        d.coefficients.push_back(AlgebraElement::from_mask(m, h));
    return d;
}

AlgebraElement recombine(const CosetDecomposition& d)
{
    const auto& reps = coset_representatives(d.subgroup);
    AlgebraElement out(GroupTag::Pin2);
    for (std::size_t r = 0; r < reps.size(); ++r)
        out += d.coefficients[r].in_group(GroupTag::Pin2) *
               AlgebraElement::monomial(reps[r].s, reps[r].j);
    return out;
}

}  // namespace swf
