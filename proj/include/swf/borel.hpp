#pragma once

// Borel homology and cohomology of type-SWF complexes over Z2, Z4, S1, Pin2.
//
// The chain model is E tensored over the subgroup algebra A_K with the
// cellular chains of X, where E is viewed as a right module through the
// inversion anti-automorphism. Its basis is (coset representative,
// generator of E, cell of X); cohomology is taken as the degreewise dual.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swf/complex.hpp"
#include "swf/gf2.hpp"
#include "swf/rational.hpp"
#include "swf/resolution.hpp"

namespace swf {

// dim H^i(BK), which equals dim H_i(BK).
int classifying_dim(GroupTag k, int i);
// Real dimension of G/K.
int coset_dimension(GroupTag k);

struct BorelCell {
    int rep;
    int gen;
    int cell;
};

class BorelComplex {
public:
    BorelComplex(std::shared_ptr<const Resolution> res, std::shared_ptr<const CellModel> cells, GroupTag k,
                 int max_degree);

    GroupTag group() const { return group_; }
    int max_degree() const { return max_degree_; }
    const Resolution& resolution() const { return *res_; }
    const CellModel& cells() const { return *cells_; }

    // Chain groups exist in degrees 0..max_degree + 1.
    std::size_t dim(int d) const;
    const std::vector<BorelCell>& basis(int d) const;
    int index(int rep, int gen, int cell) const;  // -1 outside the window
    int degree_of(int rep, int gen, int cell) const;

    gf2::Matrix boundary_matrix(int d) const;
    // Phi tensor 1 for a ring generator's action map, on a degree-d chain.
    gf2::Vector apply_action(RingGenerator tag, int d, const gf2::Vector& chain) const;

private:
    void add_terms(const std::vector<BasisTerm>& terms, int cell, int target_degree, gf2::Vector& out) const;

    std::shared_ptr<const Resolution> res_;
    std::shared_ptr<const CellModel> cells_;
    GroupTag group_;
    int max_degree_;
    int reps_;
    std::vector<std::vector<BorelCell>> basis_;
    std::vector<int> position_;
};

// Degreewise F2 vector spaces with ring generator actions. For cohomology,
// operator matrices map degree d to d + deg; for homology, d to d - deg.
struct GradedOperator {
    RingGenerator tag;
    std::string name;
    int degree = 0;
    std::vector<gf2::Matrix> matrices;  // indexed by source degree; empty if out of window
};

struct GradedModule {
    GroupTag group = GroupTag::Pin2;
    bool cohomological = true;
    Rational grading_offset{0};
    int lo = 0;
    int hi = 0;
    std::vector<int> dims;  // dims[d - lo]
    std::vector<GradedOperator> operators;
    int stabilization_degree = 0;  // first degree of the periodic zone
    int period = 1;
    bool stabilized = false;

    int dim(int d) const { return d < lo || d > hi ? 0 : dims[d - lo]; }
    const GradedOperator& op(RingGenerator tag) const;
    // Matrix of the operator from degree d (zero-sized outside the window).
    gf2::Matrix matrix(RingGenerator tag, int d) const;
    // Composite of `times` applications starting in degree d (cohomological).
    gf2::Matrix power(RingGenerator tag, int d, int times) const;
};

class BorelComputation {
public:
    BorelComputation(const SwfComplex& c, GroupTag k, int max_degree);
    BorelComputation(std::shared_ptr<const Resolution> res, std::shared_ptr<const CellModel> cells, GroupTag k,
                     int max_degree);

    GroupTag group() const { return chains_.group(); }
    int max_degree() const { return chains_.max_degree(); }
    const BorelComplex& chains() const { return chains_; }

    int homology_dim(int d) const;
    const std::vector<gf2::Vector>& homology_reps(int d) const;
    // Coordinates of a degree-d cycle in the homology basis.
    gf2::Vector coordinates(int d, const gf2::Vector& cycle) const;

    const GradedModule& homology() const { return homology_; }
    const GradedModule& cohomology() const { return cohomology_; }

private:
    void compute();

    BorelComplex chains_;
    std::vector<std::vector<gf2::Vector>> reps_;
    std::vector<gf2::EchelonBasis> coords_;
    GradedModule homology_;
    GradedModule cohomology_;
};

// Resolution length used for a window: top cell + max degree + 8.
int resolution_length_for(const SwfComplex& c, int max_degree);
int default_max_degree(const SwfComplex& c);

GradedModule borel_homology(const SwfComplex& c, GroupTag k, int max_degree);
GradedModule borel_cohomology(const SwfComplex& c, GroupTag k, int max_degree);

struct FixedInclusionMap {
    GroupTag group;
    int level = 0;
    std::vector<int> fixed_dims;
    std::vector<gf2::Matrix> homology;    // [d]: H_d(fixed) -> H_d(X)
    std::vector<gf2::Matrix> cohomology;  // [d]: H^d(X) -> H^d(fixed), the transpose
};

struct RestrictionMap {
    GroupTag from;  // K
    GroupTag to;    // L, a subgroup of K
    std::vector<gf2::Matrix> homology;    // [d]: H^L_d -> H^K_d
    std::vector<gf2::Matrix> cohomology;  // [d]: H_K^d -> H_L^d, the transpose
};

struct LocalizationReport {
    GroupTag group;
    bool pass = false;
    int from_degree = 0;      // degree from which the isomorphism is required
    int first_iso_degree = 0; // least degree from which it holds in the window
    int window_hi = 0;
    std::string detail;
};

bool is_restriction_pair(GroupTag k, GroupTag l);

// All Borel data for one complex up to a common degree, shared by the
// invariant, Gysin, and report code.
class BorelSuite {
public:
    BorelSuite(const SwfComplex& c, int max_degree);

    const SwfComplex& complex() const { return complex_; }
    int max_degree() const { return max_degree_; }
    // Degree from which the fixed-point inclusion must be an isomorphism.
    int localization_bound(GroupTag k) const;

    const BorelComputation& get(GroupTag k) const;
    const BorelComputation& fixed(GroupTag k) const;
    FixedInclusionMap fixed_inclusion(GroupTag k) const;
    RestrictionMap restriction(GroupTag k, GroupTag l) const;
    LocalizationReport localization(GroupTag k) const;

private:
    SwfComplex complex_;
    int max_degree_;
    std::shared_ptr<const Resolution> res_;
    std::shared_ptr<const CellModel> cells_;
    std::shared_ptr<const CellModel> fixed_cells_;
    std::vector<std::unique_ptr<BorelComputation>> modules_;
    std::vector<std::unique_ptr<BorelComputation>> fixed_modules_;
};

FixedInclusionMap fixed_inclusion(const SwfComplex& c, GroupTag k, int max_degree);
RestrictionMap restriction(const SwfComplex& c, GroupTag k, GroupTag l, int max_degree);
LocalizationReport localization_check(const SwfComplex& c, GroupTag k, int max_degree);

}  // namespace swf
