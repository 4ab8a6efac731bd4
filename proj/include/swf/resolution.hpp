#pragma once

// Free differential module model E of the chains of EG over the Pin(2) chain
// algebra A, and chain-level maps realizing the ring generators of H^*(BK).
//
// E is built degree by degree: whenever the homology of E (augmented in
// degree 0) is nonzero one degree down, a generator is attached whose boundary
// is the homology representative killing the most homology. The result is
// minimal, with generators in degrees congruent to 0, 1, 2 mod 4.

#include <array>
#include <cstdint>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "swf/gf2.hpp"
#include "swf/group_algebra.hpp"

namespace swf {

// Element of E: one coefficient mask in A per generator.
using FreeElement = std::vector<std::uint8_t>;

struct ResolutionGenerator {
    int degree = 0;
    std::vector<std::pair<int, std::uint8_t>> boundary;  // D y = sum mask * y_gen
};

enum class RingGenerator { q, v, U_Z4, Q, U_S1, W };

inline constexpr std::array<RingGenerator, 6> kAllRingGenerators{
    RingGenerator::q, RingGenerator::v, RingGenerator::U_Z4,
    RingGenerator::Q, RingGenerator::U_S1, RingGenerator::W};

struct RingGeneratorInfo {
    RingGenerator tag;
    GroupTag group;
    int degree;
    std::string_view name;  // "q", "v", "U", "Q", "U", "W"
};

const RingGeneratorInfo& ring_generator_info(RingGenerator g);
std::vector<RingGenerator> ring_generators(GroupTag group);
// v, U, U, W for Pin2, Z4, S1, Z2.
RingGenerator periodicity_generator(GroupTag group);

// r * b * y_gen, with r a coset representative and b a monomial of the
// subalgebra: one basis element of E as a free module over the subalgebra,
// times a subalgebra coefficient.
struct BasisTerm {
    int rep;
    int gen;
    int coef;
};

// A_K-linear chain self-map of E lowering degree by the generator's degree,
// lifting the canonical nonzero class of H^d(BK).
struct ActionChainMap {
    RingGenerator tag;
    GroupTag group;
    int drop = 0;
    std::vector<FreeElement> images;  // indexed rep * generator_count + gen; empty means zero
};

class Resolution {
public:
    explicit Resolution(int length);

    int length() const { return length_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const std::vector<ResolutionGenerator>& generators() const { return gens_; }
    int generator_degree(int g) const { return gens_[g].degree; }

    // F-basis of E in degree d as (gen, monomial) pairs.
    const std::vector<std::pair<int, int>>& basis(int d) const;
    gf2::Vector to_vector(const FreeElement& x, int d) const;
    FreeElement from_vector(const gf2::Vector& v, int d) const;

    FreeElement zero() const { return FreeElement(gens_.size(), 0); }
    // D(mono * y_gen).
    FreeElement boundary(int mono, int gen) const;
    FreeElement boundary(const FreeElement& x) const;
    gf2::Matrix boundary_matrix(int d) const;

    // Expansion of x over the A_K-basis {r * y}.
    std::vector<BasisTerm> expand(const FreeElement& x, GroupTag k) const;
    // D(r * y_gen) expanded over the A_K-basis.
    const std::vector<BasisTerm>& differential_terms(GroupTag k, int rep, int gen) const;

    const ActionChainMap& action(RingGenerator g) const;
    const std::vector<BasisTerm>& action_terms(RingGenerator g, int rep, int gen) const;

private:
    void attach_generators(int k);
    void rebuild_basis(int d);
    ActionChainMap build_action(RingGenerator g) const;

    int length_;
    std::vector<ResolutionGenerator> gens_;
    std::vector<std::vector<std::pair<int, int>>> basis_;
    std::vector<std::vector<int>> position_;  // [d][gen * 8 + mono] -> index or -1
    std::array<std::vector<std::vector<BasisTerm>>, 4> diff_terms_;
    std::array<ActionChainMap, 6> actions_;
    std::array<std::vector<std::vector<BasisTerm>>, 6> action_terms_;
};

FreeElement left_multiply(int mono, const FreeElement& x);

// Length-N resolution. Resolutions are deterministic, so a longer cached one
// is returned when available; the cache is the only shared mutable state.
std::shared_ptr<const Resolution> build_resolution(int length);
std::shared_ptr<const Resolution> cached_resolution(int min_length);

// Homology of E itself (augmented in degree 0 when `augmented`), degrees 0..length-1.
std::vector<int> total_homology_dims(const Resolution& r, bool augmented);
// Homology of F tensored with E over A_K, degrees 0..max_degree.
std::vector<int> coinvariant_homology_dims(const Resolution& r, GroupTag k, int max_degree);
// D(Phi(b)) == Phi(D(b)) on every basis element b of the A_K-basis.
bool verify_chain_map(const Resolution& r, RingGenerator g);

}  // namespace swf
