#include "swf/gysin.hpp"

#include <stdexcept>

#include <fmt/core.h>

namespace swf {

namespace {

constexpr GysinType kTypes[] = {
    {1, GroupTag::Pin2, GroupTag::S1, 0, "q"},
    {2, GroupTag::Pin2, GroupTag::Z4, 1, "q^2"},
    {3, GroupTag::Z4, GroupTag::Z2, 0, "Q"},
    {4, GroupTag::S1, GroupTag::Z2, 1, "0"},
};

// Ranks of e and p* on the classifying-space triangle, from H^i(BK).
int model_euler_rank(int type, int i)
{
    if (i < 0)
        return 0;
    switch (type) {
    case 1:
        return i % 4 <= 1 ? 1 : 0;
    case 2:
        return i % 4 == 0 ? 1 : 0;
    case 3:
        return i % 2 == 0 ? 1 : 0;
    default:
        return 0;
    }
}

int model_restriction_rank(int type, int i)
{
    if (i < 0)
        return 0;
    switch (type) {
    case 1:
        return i % 4 == 0 ? 1 : 0;
    case 2:
        return i % 4 <= 1 ? 1 : 0;
    default:
        return i % 2 == 0 ? 1 : 0;
    }
}

std::vector<std::size_t> first_column_support(const gf2::Matrix& m)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.column(j).is_zero())
            return {j};
    return {};
}

}  // namespace

const GysinType& gysin_type(int type)
{
    if (type < 1 || type > 4)
        throw std::invalid_argument(fmt::format("Gysin type must be 1..4, got {}", type));
    return kTypes[type - 1];
}

GysinTriangle build_gysin(const BorelSuite& suite, int type)
{
    const auto& ty = gysin_type(type);
    GysinTriangle t{ty, suite.complex().level, 0, suite.get(ty.k).cohomology(), suite.get(ty.l).cohomology(), {}, {}};
    t.sigma = std::max(suite.localization_bound(ty.k), suite.localization_bound(ty.l));
    const int hi = suite.max_degree();
    for (int d = 0; d + ty.n + 1 <= hi; ++d) {
        switch (type) {
        case 1:
            t.euler.push_back(t.mk.matrix(RingGenerator::q, d));
            break;
        case 2:
            t.euler.push_back(t.mk.power(RingGenerator::q, d, 2));
            break;
        case 3:
            t.euler.push_back(t.mk.matrix(RingGenerator::Q, d));
            break;
        default:
            t.euler.emplace_back(static_cast<std::size_t>(t.mk.dim(d + 2)), static_cast<std::size_t>(t.mk.dim(d)));
        }
    }
    t.restriction = suite.restriction(ty.k, ty.l).cohomology;
    return t;
}

GysinTriangle build_gysin(const SwfComplex& c, int type, int max_degree)
{
    return build_gysin(BorelSuite(c, max_degree), type);
}

std::vector<Verdict> verify_exactness(const GysinTriangle& t)
{
    const auto& ty = t.type;
    const int hi = t.mk.hi;
    const int n = ty.n;
    const std::string tag = fmt::format("gysin_{}_{}", group_name(ty.k), group_name(ty.l));
    auto euler_from = [&](int d) {
        if (d < 0)
            return gf2::Matrix(static_cast<std::size_t>(t.mk.dim(d + n + 1)), 0);
        return t.euler[d];
    };

    std::vector<Verdict> out;

    Verdict exact{tag + "_exactness", true, -1, {}, ""};
    for (int deg = 0; deg <= hi && exact.pass; ++deg) {
        const auto& p = t.restriction[deg];
        const auto image = gf2::echelonize(gf2::image_basis(euler_from(deg - n - 1)));
        const auto kernel = gf2::kernel_basis(p);
        if (image != kernel) {
            exact = {exact.name, false, deg, {},
                     fmt::format("image of e has dim {} but kernel of p* has dim {} in degree {}", image.size(),
                                 kernel.size(), deg)};
            break;
        }
        if (deg + 1 > hi)
            continue;
        const int ker_e = deg - n < 0 ? 0 : t.mk.dim(deg - n) - static_cast<int>(gf2::rank(euler_from(deg - n)));
        const int rank_p = static_cast<int>(gf2::rank(p));
        if (t.ml.dim(deg) != rank_p + ker_e)
            exact = {exact.name, false, deg, {},
                     fmt::format("dim M_L = {} but rank p* + dim ker e = {} + {} in degree {}", t.ml.dim(deg), rank_p,
                                 ker_e, deg)};
    }
    if (exact.pass)
        exact.detail = fmt::format("exact in degrees 0..{}", hi);
    out.push_back(std::move(exact));

    Verdict norm{tag + "_normalization", true, -1, {}, ""};
    for (int d = t.sigma; d <= hi && norm.pass; ++d) {
        const int i = d - t.level;
        if (d + n + 1 <= hi) {
            const int r = static_cast<int>(gf2::rank(t.euler[d]));
            if (r != model_euler_rank(ty.type, i))
                norm = {norm.name, false, d, {}, fmt::format("rank of e from degree {} is {}, expected {}", d, r,
                                                             model_euler_rank(ty.type, i))};
        }
        const int r = static_cast<int>(gf2::rank(t.restriction[d]));
        if (norm.pass && r != model_restriction_rank(ty.type, i))
            norm = {norm.name, false, d, {},
                    fmt::format("rank of p* in degree {} is {}, expected {}", d, r, model_restriction_rank(ty.type, i))};
    }
    if (norm.pass)
        norm.detail = fmt::format("matches the classifying-space triangle shifted by {} in degrees {}..{}", t.level,
                                  t.sigma, hi);
    out.push_back(std::move(norm));

    // p* (x . a) = p*(x) . b as matrices, for each relation (a, b) of the pair.
    struct Relation {
        RingGenerator a;
        int b_power;
        std::optional<RingGenerator> b;  // nothing means b = 0
        const char* text;
    };
    std::vector<Relation> rels;
    if (ty.type == 1)
        rels = {{RingGenerator::v, 2, RingGenerator::U_S1, "p*v = U^2"}, {RingGenerator::q, 1, {}, "p*q = 0"}};
    else if (ty.type == 2)
        rels = {{RingGenerator::v, 2, RingGenerator::U_Z4, "p*v = U^2"}, {RingGenerator::q, 1, RingGenerator::Q, "p*q = Q"}};
    else if (ty.type == 3)
        rels = {{RingGenerator::U_Z4, 2, RingGenerator::W, "p*U = W^2"}, {RingGenerator::Q, 1, {}, "p*Q = 0"}};
    else
        rels = {{RingGenerator::U_S1, 2, RingGenerator::W, "p*U = W^2"}};

    Verdict rel{tag + "_relations", true, -1, {}, ""};
    std::string names;
    for (const auto& r : rels) {
        names += fmt::format("{}{}", names.empty() ? "" : ", ", r.text);
        const int step = ring_generator_info(r.a).degree;
        for (int d = 0; d + step <= hi && rel.pass; ++d) {
            const auto lhs = t.restriction[d + step] * t.mk.matrix(r.a, d);
            const auto rhs = r.b ? t.ml.power(*r.b, d, r.b_power) * t.restriction[d]
                                 : gf2::Matrix(lhs.rows(), lhs.cols());
            if (lhs != rhs)
                rel = {rel.name, false, d, first_column_support(lhs + rhs),
                       fmt::format("{} fails from degree {}", r.text, d)};
        }
    }
    if (rel.pass)
        rel.detail = names;
    out.push_back(std::move(rel));
    return out;
}

}  // namespace swf
