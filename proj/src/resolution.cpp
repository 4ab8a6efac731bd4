#include "swf/resolution.hpp"

#include <mutex>
#include <stdexcept>

#include <fmt/core.h>

namespace swf {

namespace {

struct ProductTable {
    std::array<std::array<int, 8>, 8> prod{};
    ProductTable()
    {
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                prod[a][b] = monomial_product(a, b);
    }
};

const ProductTable& products()
{
    static const ProductTable t;
    return t;
}

std::uint8_t mono_times_mask(int mono, std::uint8_t mask)
{
    std::uint8_t out = 0;
    const auto& p = products().prod[mono];
    for (int b = 0; b < 8; ++b)
        if (((mask >> b) & 1U) && p[b] >= 0)
            out ^= static_cast<std::uint8_t>(1U << p[b]);
    return out;
}

int group_slot(GroupTag g) { return static_cast<int>(g); }
int ring_slot(RingGenerator g) { return static_cast<int>(g); }

int rep_degree(GroupTag k, int rep) { return coset_representatives(k)[rep].s; }

bool is_zero(const FreeElement& x)
{
    for (auto m : x)
        if (m != 0)
            return false;
    return true;
}

// Coinvariant complex F tensor_{A_K} E: basis (rep, gen) by total degree.
struct Coinvariants {
    const Resolution& res;
    GroupTag k;
    std::vector<std::vector<std::pair<int, int>>> basis;

    Coinvariants(const Resolution& r, GroupTag group, int max_degree) : res(r), k(group)
    {
        basis.resize(max_degree + 2);
        const int reps = static_cast<int>(coset_representatives(k).size());
        for (int rep = 0; rep < reps; ++rep)
            for (int g = 0; g < res.generator_count(); ++g) {
                const int d = rep_degree(k, rep) + res.generator_degree(g);
                if (d <= max_degree + 1)
                    basis[d].emplace_back(rep, g);
            }
    }

    int index(int d, int rep, int gen) const
    {
        const auto& b = basis[d];
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i].first == rep && b[i].second == gen)
                return static_cast<int>(i);
        return -1;
    }

    // Boundary C_d -> C_{d-1}.
    gf2::Matrix matrix(int d) const
    {
        if (d <= 0 || d >= static_cast<int>(basis.size()))
            return gf2::Matrix(d <= 0 ? 0 : basis[d - 1].size(), d <= 0 ? basis[0].size() : 0);
        gf2::Matrix m(basis[d - 1].size(), basis[d].size());
        for (std::size_t col = 0; col < basis[d].size(); ++col) {
            const auto [rep, gen] = basis[d][col];
            for (const auto& t : res.differential_terms(k, rep, gen)) {
                if (Monomial::from_index(t.coef).s != 0)
                    continue;
                const int row = index(d - 1, t.rep, t.gen);
                m.flip(static_cast<std::size_t>(row), col);
            }
        }
        return m;
    }
};

}  // namespace

const RingGeneratorInfo& ring_generator_info(RingGenerator g)
{
    static const std::array<RingGeneratorInfo, 6> table{{
        {RingGenerator::q, GroupTag::Pin2, 1, "q"},
        {RingGenerator::v, GroupTag::Pin2, 4, "v"},
        {RingGenerator::U_Z4, GroupTag::Z4, 2, "U"},
        {RingGenerator::Q, GroupTag::Z4, 1, "Q"},
        {RingGenerator::U_S1, GroupTag::S1, 2, "U"},
        {RingGenerator::W, GroupTag::Z2, 1, "W"},
    }};
    return table[ring_slot(g)];
}

std::vector<RingGenerator> ring_generators(GroupTag group)
{
    switch (group) {
    case GroupTag::Pin2:
        return {RingGenerator::q, RingGenerator::v};
    case GroupTag::Z4:
        return {RingGenerator::U_Z4, RingGenerator::Q};
    case GroupTag::S1:
        return {RingGenerator::U_S1};
    case GroupTag::Z2:
        return {RingGenerator::W};
    }
    return {};
}

RingGenerator periodicity_generator(GroupTag group)
{
    switch (group) {
    case GroupTag::Pin2:
        return RingGenerator::v;
    case GroupTag::Z4:
        return RingGenerator::U_Z4;
    case GroupTag::S1:
        return RingGenerator::U_S1;
    case GroupTag::Z2:
        return RingGenerator::W;
    }
    return RingGenerator::v;
}

FreeElement left_multiply(int mono, const FreeElement& x)
{
    FreeElement out(x.size(), 0);
    for (std::size_t g = 0; g < x.size(); ++g)
        out[g] = mono_times_mask(mono, x[g]);
    return out;
}

Resolution::Resolution(int length) : length_(length)
{
    if (length < 1)
        throw std::invalid_argument("resolution length must be positive");
    gens_.push_back({0, {}});
    for (int k = 1; k <= length_; ++k)
        attach_generators(k);
    for (int d = 0; d <= length_ + 1; ++d)
        rebuild_basis(d);

    for (auto k : kAllGroups) {
        const int reps = static_cast<int>(coset_representatives(k).size());
        auto& table = diff_terms_[group_slot(k)];
        table.resize(reps * gens_.size());
        for (int rep = 0; rep < reps; ++rep)
            for (int g = 0; g < generator_count(); ++g)
                table[rep * gens_.size() + g] = expand(boundary(coset_representatives(k)[rep].index(), g), k);
    }
    for (auto tag : kAllRingGenerators) {
        actions_[ring_slot(tag)] = build_action(tag);
        const auto& act = actions_[ring_slot(tag)];
        auto& table = action_terms_[ring_slot(tag)];
        table.resize(act.images.size());
        for (std::size_t i = 0; i < act.images.size(); ++i)
            if (!act.images[i].empty())
                table[i] = expand(act.images[i], act.group);
    }
}

void Resolution::rebuild_basis(int d)
{
    if (static_cast<int>(basis_.size()) <= d) {
        basis_.resize(d + 1);
        position_.resize(d + 1);
    }
    auto& b = basis_[d];
    auto& pos = position_[d];
    b.clear();
    pos.assign(gens_.size() * 8, -1);
    for (int g = 0; g < generator_count(); ++g) {
        const int gd = gens_[g].degree;
        if (gd != d && gd != d - 1)
            continue;
        const int first = gd == d ? 0 : 4;
        for (int mono = first; mono < first + 4; ++mono) {
            pos[g * 8 + mono] = static_cast<int>(b.size());
            b.emplace_back(g, mono);
        }
    }
}

const std::vector<std::pair<int, int>>& Resolution::basis(int d) const
{
    static const std::vector<std::pair<int, int>> empty;
    if (d < 0 || d >= static_cast<int>(basis_.size()))
        return empty;
    return basis_[d];
}

gf2::Vector Resolution::to_vector(const FreeElement& x, int d) const
{
    gf2::Vector v(basis(d).size());
    for (std::size_t g = 0; g < x.size(); ++g) {
        for (int mono = 0; mono < 8; ++mono) {
            if (!((x[g] >> mono) & 1U))
                continue;
            const int p = position_[d][g * 8 + mono];
            if (p < 0)
                throw std::logic_error(fmt::format("element of E is not homogeneous of degree {}", d));
            v.set(static_cast<std::size_t>(p));
        }
    }
    return v;
}

FreeElement Resolution::from_vector(const gf2::Vector& v, int d) const
{
    FreeElement x = zero();
    for (auto i : v.support()) {
        const auto [g, mono] = basis(d)[i];
        x[g] ^= static_cast<std::uint8_t>(1U << mono);
    }
    return x;
}

FreeElement Resolution::boundary(int mono, int gen) const
{
    FreeElement out = zero();
    out[gen] ^= monomial_boundary(mono);
    for (const auto& [g, mask] : gens_[gen].boundary)
        out[g] ^= mono_times_mask(mono, mask);
    return out;
}

FreeElement Resolution::boundary(const FreeElement& x) const
{
    FreeElement out = zero();
    for (std::size_t g = 0; g < x.size(); ++g)
        for (int mono = 0; mono < 8; ++mono)
            if ((x[g] >> mono) & 1U) {
                const auto b = boundary(mono, static_cast<int>(g));
                for (std::size_t h = 0; h < out.size(); ++h)
                    out[h] ^= b[h];
            }
    return out;
}

gf2::Matrix Resolution::boundary_matrix(int d) const
{
    const auto& src = basis(d);
    const auto& dst = basis(d - 1);
    gf2::Matrix m(dst.size(), src.size());
    if (d <= 0)
        return m;
    for (std::size_t col = 0; col < src.size(); ++col) {
        const auto [g, mono] = src[col];
        for (auto row : to_vector(boundary(mono, g), d - 1).support())
            m.set(row, col);
    }
    return m;
}

void Resolution::attach_generators(int k)
{
    const int d = k - 1;
    while (true) {
        rebuild_basis(d);
        rebuild_basis(k);
        const std::size_t n = basis(d).size();

        std::vector<gf2::Vector> cycles;
        if (d == 0) {
            gf2::Matrix eps(1, n);
            for (std::size_t i = 0; i < n; ++i)
                if (basis(0)[i].second < 4)
                    eps.set(0, i);
            cycles = gf2::kernel_basis(eps);
        } else {
            cycles = gf2::kernel_basis(boundary_matrix(d));
        }

        gf2::EchelonBasis bounds(n, 0);
        for (const auto& b : gf2::image_basis(boundary_matrix(k)))
            bounds.insert(b);

        gf2::EchelonBasis span = bounds;
        std::vector<gf2::Vector> reps;
        for (const auto& z : cycles) {
            auto r = span.reduce(z).residual;
            if (r.is_zero())
                continue;
            span.insert(r);
            reps.push_back(std::move(r));
        }
        if (reps.empty())
            return;

        const std::size_t t = reps.size();
        const std::uint64_t combos = t <= 12 ? (std::uint64_t{1} << t) : 0;
        std::vector<std::uint64_t> candidates;
        if (combos != 0) {
            for (std::uint64_t c = 1; c < combos; ++c)
                candidates.push_back(c);
        } else {
            for (std::size_t i = 0; i < t; ++i)
                candidates.push_back(std::uint64_t{1} << i);
        }

        gf2::Vector best;
        std::size_t best_remaining = t + 1;
        for (auto c : candidates) {
            gf2::Vector z(n);
            for (std::size_t i = 0; i < t && i < 64; ++i)
                if ((c >> i) & 1U)
                    z ^= reps[i];
            const auto elem = from_vector(z, d);
            gf2::EchelonBasis killed = bounds;
            std::size_t gained = 0;
            for (int b = 0; b < 4; ++b)
                if (killed.insert(to_vector(left_multiply(b, elem), d)))
                    ++gained;
            const std::size_t remaining = t - gained;
            if (remaining < best_remaining) {
                best_remaining = remaining;
                best = z;
            }
        }

        ResolutionGenerator gen{k, {}};
        const auto elem = from_vector(best, d);
        for (std::size_t g = 0; g < elem.size(); ++g)
            if (elem[g] != 0)
                gen.boundary.emplace_back(static_cast<int>(g), elem[g]);
        gens_.push_back(std::move(gen));
    }
}

std::vector<BasisTerm> Resolution::expand(const FreeElement& x, GroupTag k) const
{
    std::vector<BasisTerm> out;
    for (std::size_t g = 0; g < x.size(); ++g)
        for (int mono = 0; mono < 8; ++mono)
            if ((x[g] >> mono) & 1U) {
                const auto sp = split_monomial(mono, k);
                out.push_back({sp.rep, static_cast<int>(g), sp.coefficient});
            }
    return out;
}

const std::vector<BasisTerm>& Resolution::differential_terms(GroupTag k, int rep, int gen) const
{
    return diff_terms_[group_slot(k)][rep * gens_.size() + gen];
}

const ActionChainMap& Resolution::action(RingGenerator g) const { return actions_[ring_slot(g)]; }

const std::vector<BasisTerm>& Resolution::action_terms(RingGenerator g, int rep, int gen) const
{
    return action_terms_[ring_slot(g)][rep * gens_.size() + gen];
}

ActionChainMap Resolution::build_action(RingGenerator tag) const
{
    const auto& info = ring_generator_info(tag);
    const GroupTag k = info.group;
    const int drop = info.degree;
    const int reps = static_cast<int>(coset_representatives(k).size());
    const int ngens = generator_count();

    ActionChainMap map{tag, k, drop, std::vector<FreeElement>(reps * ngens)};

    // Canonical cocycle of the one-dimensional H^drop(BK).
    const Coinvariants co(*this, k, drop + 1);
    const auto& cd = co.basis[drop];
    const auto bounds = gf2::image_basis(co.matrix(drop + 1));
    gf2::EchelonBasis span(cd.size(), 0);
    for (const auto& b : bounds)
        span.insert(b);
    std::optional<gf2::Vector> hom;
    for (const auto& z : gf2::kernel_basis(co.matrix(drop))) {
        if (!span.contains(z)) {
            hom = z;
            break;
        }
    }
    if (!hom)
        throw std::logic_error(fmt::format("H^{}(B{}) vanishes in the resolution", drop, group_name(k)));
    gf2::Matrix constraints(bounds.size() + 1, cd.size());
    gf2::Vector rhs(bounds.size() + 1);
    for (std::size_t i = 0; i < bounds.size(); ++i)
        for (auto j : bounds[i].support())
            constraints.set(i, j);
    for (auto j : hom->support())
        constraints.set(bounds.size(), j);
    rhs.set(bounds.size());
    const auto cocycle = gf2::solve(constraints, rhs);
    if (!cocycle)
        throw std::logic_error("no cocycle detects the homology class");

    for (int e = drop; e <= length_ + 1; ++e) {
        for (int rep = 0; rep < reps; ++rep) {
            for (int g = 0; g < ngens; ++g) {
                if (rep_degree(k, rep) + gens_[g].degree != e)
                    continue;
                auto& image = map.images[rep * ngens + g];
                if (e == drop) {
                    if (cocycle->get(static_cast<std::size_t>(co.index(drop, rep, g)))) {
                        image = zero();
                        image[0] = 1;
                    }
                    continue;
                }
                if (e - drop > length_)
                    continue;
                FreeElement target = zero();
                for (const auto& t : differential_terms(k, rep, g)) {
                    const auto& sub = map.images[t.rep * ngens + t.gen];
                    if (sub.empty())
                        continue;
                    const auto prod = left_multiply(t.coef, sub);
                    for (int h = 0; h < ngens; ++h)
                        target[h] ^= prod[h];
                }
                if (is_zero(target))
                    continue;
                const auto w = gf2::solve(boundary_matrix(e - drop), to_vector(target, e - drop - 1));
                if (!w)
                    throw std::logic_error(fmt::format("cannot lift the {} action in degree {}", info.name, e));
                image = from_vector(*w, e - drop);
            }
        }
    }
    return map;
}

std::shared_ptr<const Resolution> build_resolution(int length)
{
    return std::make_shared<const Resolution>(length);
}

std::shared_ptr<const Resolution> cached_resolution(int min_length)
{
    static std::mutex mutex;
    static std::shared_ptr<const Resolution> cached;
    std::lock_guard lock(mutex);
    if (!cached || cached->length() < min_length)
        cached = build_resolution(min_length);
    return cached;
}

std::vector<int> total_homology_dims(const Resolution& r, bool augmented)
{
    std::vector<int> dims;
    for (int d = 0; d < r.length(); ++d) {
        const std::size_t n = r.basis(d).size();
        std::size_t cycles;
        if (d == 0 && augmented)
            cycles = n - 1;
        else
            cycles = n - gf2::rank(r.boundary_matrix(d));
        dims.push_back(static_cast<int>(cycles - gf2::rank(r.boundary_matrix(d + 1))));
    }
    return dims;
}

std::vector<int> coinvariant_homology_dims(const Resolution& r, GroupTag k, int max_degree)
{
    const Coinvariants co(r, k, max_degree);
    std::vector<int> dims;
    for (int d = 0; d <= max_degree; ++d) {
        const std::size_t n = co.basis[d].size();
        const std::size_t out = d == 0 ? 0 : gf2::rank(co.matrix(d));
        dims.push_back(static_cast<int>(n - out - gf2::rank(co.matrix(d + 1))));
    }
    return dims;
}

bool verify_chain_map(const Resolution& r, RingGenerator tag)
{
    const auto& map = r.action(tag);
    const int reps = static_cast<int>(coset_representatives(map.group).size());
    const int ngens = r.generator_count();
    for (int rep = 0; rep < reps; ++rep) {
        for (int g = 0; g < ngens; ++g) {
            const int e = rep_degree(map.group, rep) + r.generator_degree(g);
            if (e - map.drop > r.length() - 1)
                continue;
            const auto& image = map.images[rep * ngens + g];
            FreeElement lhs = image.empty() ? r.zero() : r.boundary(image);
            FreeElement rhs = r.zero();
            for (const auto& t : r.differential_terms(map.group, rep, g)) {
                const auto& sub = map.images[t.rep * ngens + t.gen];
                if (sub.empty())
                    continue;
                const auto prod = left_multiply(t.coef, sub);
                for (int h = 0; h < ngens; ++h)
                    rhs[h] ^= prod[h];
            }
            if (lhs != rhs)
                return false;
        }
    }
    return true;
}

}  // namespace swf
