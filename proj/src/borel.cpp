#include "swf/borel.hpp"

#include <stdexcept>

#include <fmt/core.h>

namespace swf {

namespace {

int rep_degree(GroupTag k, int rep) { return coset_representatives(k)[rep].s; }

int slot(GroupTag k) { return static_cast<int>(k); }

gf2::Matrix transpose_or_empty(const gf2::Matrix& m) { return m.transpose(); }

// First degree d0 such that every degree in [d0, hi] satisfies `ok`.
template <typename Pred>
int first_stable_degree(int lo, int hi, Pred ok)
{
    int d0 = hi + 1;
    for (int d = hi; d >= lo; --d) {
        if (!ok(d))
            break;
        d0 = d;
    }
    return d0;
}

}  // namespace

int classifying_dim(GroupTag k, int i)
{
    if (i < 0)
        return 0;
    switch (k) {
    case GroupTag::Pin2:
        return i % 4 == 3 ? 0 : 1;
    case GroupTag::S1:
        return i % 2 == 0 ? 1 : 0;
    case GroupTag::Z4:
    case GroupTag::Z2:
        return 1;
    }
    return 0;
}

int coset_dimension(GroupTag k) { return k == GroupTag::Z4 || k == GroupTag::Z2 ? 1 : 0; }

BorelComplex::BorelComplex(std::shared_ptr<const Resolution> res, std::shared_ptr<const CellModel> cells,
                           GroupTag k, int max_degree)
    : res_(std::move(res)),
      cells_(std::move(cells)),
      group_(k),
      max_degree_(max_degree),
      reps_(static_cast<int>(coset_representatives(k).size()))
{
    if (res_->length() < max_degree + 1)
        throw std::invalid_argument(
            fmt::format("resolution of length {} is too short for degree {}", res_->length(), max_degree));
    const int ngens = res_->generator_count();
    const int ncells = cells_->size();
    basis_.resize(max_degree + 2);
    position_.assign(static_cast<std::size_t>(reps_) * ngens * ncells, -1);
    for (int rep = 0; rep < reps_; ++rep)
        for (int g = 0; g < ngens; ++g)
            for (int cell = 0; cell < ncells; ++cell) {
                const int d = degree_of(rep, g, cell);
                if (d > max_degree + 1)
                    continue;
                position_[(static_cast<std::size_t>(rep) * ngens + g) * ncells + cell] =
                    static_cast<int>(basis_[d].size());
                basis_[d].push_back({rep, g, cell});
            }
}

std::size_t BorelComplex::dim(int d) const
{
    if (d < 0 || d >= static_cast<int>(basis_.size()))
        return 0;
    return basis_[d].size();
}

const std::vector<BorelCell>& BorelComplex::basis(int d) const
{
    static const std::vector<BorelCell> empty;
    if (d < 0 || d >= static_cast<int>(basis_.size()))
        return empty;
    return basis_[d];
}

int BorelComplex::index(int rep, int gen, int cell) const
{
    return position_[(static_cast<std::size_t>(rep) * res_->generator_count() + gen) * cells_->size() + cell];
}

int BorelComplex::degree_of(int rep, int gen, int cell) const
{
    return rep_degree(group_, rep) + res_->generator_degree(gen) + cells_->degree(cell);
}

void BorelComplex::add_terms(const std::vector<BasisTerm>& terms, int cell, int target_degree,
                             gf2::Vector& out) const
{
    for (const auto& t : terms) {
        const auto moved = cells_->act(monomial_inversion(t.coef), cell);
        if (!moved)
            continue;
        const int idx = index(t.rep, t.gen, *moved);
        if (idx < 0 || degree_of(t.rep, t.gen, *moved) != target_degree)
            throw std::logic_error("Borel chain term falls outside the window");
        out.flip(static_cast<std::size_t>(idx));
    }
}

gf2::Matrix BorelComplex::boundary_matrix(int d) const
{
    const auto& src = basis(d);
    std::vector<gf2::Vector> cols;
    cols.reserve(src.size());
    const std::size_t rows = dim(d - 1);
    for (const auto& b : src) {
        gf2::Vector col(rows);
        if (d > 0) {
            add_terms(res_->differential_terms(group_, b.rep, b.gen), b.cell, d - 1, col);
            for (int z : cells_->boundary(b.cell))
                col.flip(static_cast<std::size_t>(index(b.rep, b.gen, z)));
        }
        cols.push_back(std::move(col));
    }
    return gf2::Matrix::from_columns(rows, cols);
}

gf2::Vector BorelComplex::apply_action(RingGenerator tag, int d, const gf2::Vector& chain) const
{
    const int drop = ring_generator_info(tag).degree;
    gf2::Vector out(dim(d - drop));
    if (d - drop < 0)
        return out;
    for (auto i : chain.support()) {
        const auto& b = basis_[d][i];
        add_terms(res_->action_terms(tag, b.rep, b.gen), b.cell, d - drop, out);
    }
    return out;
}

const GradedOperator& GradedModule::op(RingGenerator tag) const
{
    for (const auto& o : operators)
        if (o.tag == tag)
            return o;
    throw std::invalid_argument(fmt::format("operator {} does not act on {} modules", ring_generator_info(tag).name,
                                            group_name(group)));
}

gf2::Matrix GradedModule::matrix(RingGenerator tag, int d) const
{
    const auto& o = op(tag);
    const int target = cohomological ? d + o.degree : d - o.degree;
    if (d < lo || d > hi || target > hi)
        throw std::out_of_range(fmt::format("{} from degree {} leaves the window [{}, {}]", o.name, d, lo, hi));
    if (target < lo)
        return gf2::Matrix(0, static_cast<std::size_t>(dim(d)));
    return o.matrices[d - lo];
}

gf2::Matrix GradedModule::power(RingGenerator tag, int d, int times) const
{
    const int step = cohomological ? op(tag).degree : -op(tag).degree;
    gf2::Matrix out = gf2::Matrix::identity(static_cast<std::size_t>(dim(d)));
    int cur = d;
    for (int t = 0; t < times; ++t) {
        out = matrix(tag, cur) * out;
        cur += step;
    }
    return out;
}

int resolution_length_for(const SwfComplex& c, int max_degree)
{
    return std::max(8, c.top_cell_degree() + max_degree + 8);
}

int default_max_degree(const SwfComplex& c) { return c.top_cell_degree() + 16; }

BorelComputation::BorelComputation(const SwfComplex& c, GroupTag k, int max_degree)
    : BorelComputation(cached_resolution(resolution_length_for(c, max_degree)), std::make_shared<CellModel>(c), k,
                       max_degree)
{
}

BorelComputation::BorelComputation(std::shared_ptr<const Resolution> res, std::shared_ptr<const CellModel> cells,
                                   GroupTag k, int max_degree)
    : chains_(std::move(res), std::move(cells), k, max_degree)
{
    compute();
}

int BorelComputation::homology_dim(int d) const
{
    if (d < 0 || d > max_degree())
        return 0;
    return static_cast<int>(reps_[d].size());
}

const std::vector<gf2::Vector>& BorelComputation::homology_reps(int d) const { return reps_.at(d); }

gf2::Vector BorelComputation::coordinates(int d, const gf2::Vector& cycle) const
{
    auto red = coords_.at(d).reduce(cycle);
    if (!red.residual.is_zero())
        throw std::logic_error(fmt::format("chain in degree {} is not a cycle", d));
    return red.tag;
}

void BorelComputation::compute()
{
    const int hi = max_degree();
    reps_.resize(hi + 1);
    coords_.reserve(hi + 1);
    gf2::Matrix out_bd = chains_.boundary_matrix(0);
    for (int d = 0; d <= hi; ++d) {
        const gf2::Matrix in_bd = chains_.boundary_matrix(d + 1);
        const auto cycles = gf2::kernel_basis(out_bd);
        const auto bounds = gf2::image_basis(in_bd);
        const std::size_t h = cycles.size() - bounds.size();
        gf2::EchelonBasis eb(chains_.dim(d), h);
        for (const auto& b : bounds)
            eb.insert(b);
        for (const auto& z : cycles) {
            if (reps_[d].size() == h)
                break;
            if (eb.insert(z, gf2::Vector::unit(h, reps_[d].size())))
                reps_[d].push_back(z);
        }
        coords_.push_back(std::move(eb));
        out_bd = in_bd;
    }

    const GroupTag k = group();
    homology_.group = cohomology_.group = k;
    homology_.cohomological = false;
    cohomology_.cohomological = true;
    homology_.hi = cohomology_.hi = hi;
    for (int d = 0; d <= hi; ++d)
        homology_.dims.push_back(homology_dim(d));
    cohomology_.dims = homology_.dims;

    for (auto tag : ring_generators(k)) {
        const auto& info = ring_generator_info(tag);
        GradedOperator hom{tag, std::string(info.name), info.degree, {}};
        GradedOperator coh{tag, std::string(info.name), info.degree, {}};
        for (int d = 0; d <= hi; ++d) {
            const int t = d - info.degree;
            std::vector<gf2::Vector> cols;
            for (const auto& z : reps_[d])
                cols.push_back(t < 0 ? gf2::Vector(0) : coordinates(t, chains_.apply_action(tag, d, z)));
            hom.matrices.push_back(gf2::Matrix::from_columns(static_cast<std::size_t>(homology_dim(t)), cols));
        }
        for (int d = 0; d <= hi; ++d) {
            const int t = d + info.degree;
            coh.matrices.push_back(t <= hi ? transpose_or_empty(hom.matrices[t]) : gf2::Matrix());
        }
        homology_.operators.push_back(std::move(hom));
        cohomology_.operators.push_back(std::move(coh));
    }

    const int s = chains_.cells().level();
    const auto per = periodicity_generator(k);
    const int p = ring_generator_info(per).degree;
    const int d0 = first_stable_degree(0, hi, [&](int d) {
        if (cohomology_.dim(d) != classifying_dim(k, d - s))
            return false;
        if (d + p > hi)
            return true;
        const auto m = cohomology_.matrix(per, d);
        return static_cast<int>(gf2::rank(m)) == cohomology_.dim(d) && cohomology_.dim(d + p) == cohomology_.dim(d);
    });
    for (auto* m : {&homology_, &cohomology_}) {
        m->stabilization_degree = d0;
        m->period = p;
        m->stabilized = hi - d0 + 1 >= 8;
    }
}

GradedModule borel_homology(const SwfComplex& c, GroupTag k, int max_degree)
{
    return BorelComputation(c, k, max_degree).homology();
}

GradedModule borel_cohomology(const SwfComplex& c, GroupTag k, int max_degree)
{
    return BorelComputation(c, k, max_degree).cohomology();
}

bool is_restriction_pair(GroupTag k, GroupTag l)
{
    return (k == GroupTag::Pin2 && (l == GroupTag::S1 || l == GroupTag::Z4)) ||
           ((k == GroupTag::Z4 || k == GroupTag::S1) && l == GroupTag::Z2);
}

BorelSuite::BorelSuite(const SwfComplex& c, int max_degree)
    : complex_(c),
      max_degree_(max_degree),
      res_(cached_resolution(resolution_length_for(c, max_degree))),
      cells_(std::make_shared<CellModel>(c)),
      fixed_cells_(std::make_shared<CellModel>(fixed_subcomplex(c)))
{
    for (auto k : kAllGroups) {
        modules_.push_back(std::make_unique<BorelComputation>(res_, cells_, k, max_degree));
        fixed_modules_.push_back(std::make_unique<BorelComputation>(res_, fixed_cells_, k, max_degree));
    }
}

int BorelSuite::localization_bound(GroupTag k) const
{
    const int top = complex_.top_free_degree();
    return top < 0 ? 0 : top + 1 + coset_dimension(k);
}

const BorelComputation& BorelSuite::get(GroupTag k) const { return *modules_[slot(k)]; }
const BorelComputation& BorelSuite::fixed(GroupTag k) const { return *fixed_modules_[slot(k)]; }

FixedInclusionMap BorelSuite::fixed_inclusion(GroupTag k) const
{
    const auto& x = get(k);
    const auto& f = fixed(k);
    FixedInclusionMap out{k, complex_.level, {}, {}, {}};
    for (int d = 0; d <= max_degree_; ++d) {
        out.fixed_dims.push_back(f.homology_dim(d));
        std::vector<gf2::Vector> cols;
        for (const auto& z : f.homology_reps(d)) {
            gf2::Vector image(x.chains().dim(d));
            for (auto i : z.support()) {
                const auto& b = f.chains().basis(d)[i];
                image.flip(static_cast<std::size_t>(x.chains().index(b.rep, b.gen, b.cell)));
            }
            cols.push_back(x.coordinates(d, image));
        }
        auto m = gf2::Matrix::from_columns(static_cast<std::size_t>(x.homology_dim(d)), cols);
        out.cohomology.push_back(m.transpose());
        out.homology.push_back(std::move(m));
    }
    return out;
}

RestrictionMap BorelSuite::restriction(GroupTag k, GroupTag l) const
{
    if (!is_restriction_pair(k, l))
        throw std::invalid_argument(
            fmt::format("restriction from {} to {} is not supported", group_name(k), group_name(l)));
    const auto& big = get(k);
    const auto& small = get(l);
    const auto& reps_l = coset_representatives(l);
    RestrictionMap out{k, l, {}, {}};
    for (int d = 0; d <= max_degree_; ++d) {
        std::vector<gf2::Vector> cols;
        for (const auto& z : small.homology_reps(d)) {
            gf2::Vector image(big.chains().dim(d));
            for (auto i : z.support()) {
                const auto& b = small.chains().basis(d)[i];
                const auto sp = split_monomial(reps_l[b.rep].index(), k);
                const auto moved = cells_->act(monomial_inversion(sp.coefficient), b.cell);
                if (!moved)
                    continue;
                image.flip(static_cast<std::size_t>(big.chains().index(sp.rep, b.gen, *moved)));
            }
            cols.push_back(big.coordinates(d, image));
        }
        auto m = gf2::Matrix::from_columns(static_cast<std::size_t>(big.homology_dim(d)), cols);
        out.cohomology.push_back(m.transpose());
        out.homology.push_back(std::move(m));
    }
    return out;
}

LocalizationReport BorelSuite::localization(GroupTag k) const
{
    const auto incl = fixed_inclusion(k);
    const auto& x = get(k);
    LocalizationReport rep{k, false, localization_bound(k), 0, max_degree_, {}};
    auto iso = [&](int d) {
        const int n = x.homology_dim(d);
        return n == incl.fixed_dims[d] && static_cast<int>(gf2::rank(incl.cohomology[d])) == n;
    };
    rep.first_iso_degree = first_stable_degree(0, max_degree_, iso);
    const int span = max_degree_ - rep.from_degree + 1;
    if (span < 8) {
        rep.detail = fmt::format("window [{}, {}] leaves fewer than 8 degrees above {}", 0, max_degree_,
                                 rep.from_degree);
        return rep;
    }
    rep.pass = rep.first_iso_degree <= rep.from_degree;
    rep.detail = rep.pass ? fmt::format("isomorphism in degrees {}..{}", rep.from_degree, max_degree_)
                          : fmt::format("isomorphism only from degree {}", rep.first_iso_degree);
    return rep;
}

FixedInclusionMap fixed_inclusion(const SwfComplex& c, GroupTag k, int max_degree)
{
    return BorelSuite(c, max_degree).fixed_inclusion(k);
}

RestrictionMap restriction(const SwfComplex& c, GroupTag k, GroupTag l, int max_degree)
{
    return BorelSuite(c, max_degree).restriction(k, l);
}

LocalizationReport localization_check(const SwfComplex& c, GroupTag k, int max_degree)
{
    return BorelSuite(c, max_degree).localization(k);
}

}  // namespace swf
