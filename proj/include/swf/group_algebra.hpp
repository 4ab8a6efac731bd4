#pragma once

// Cellular chain algebra of G = Pin(2) over F2 and of its subgroups
// Z/2 = <j^2>, Z/4 = <j>, S^1.
//
// The algebra is F[s, j]/(s j = j^3 s, s^2 = 0, j^4 = 1) with deg s = 1 and
// deg j = 0. Elements are stored in the normal form sum c[a][b] s^a j^b
// (s on the left), packed into one byte: bit 4a + b holds c[a][b].

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swf {

enum class GroupTag { Z2, Z4, S1, Pin2 };

inline constexpr std::array<GroupTag, 4> kAllGroups{GroupTag::Z2, GroupTag::Z4, GroupTag::S1,
                                                    GroupTag::Pin2};

std::string_view group_name(GroupTag g);  // "z2", "z4", "s1", "pin2"
std::optional<GroupTag> parse_group(std::string_view name);

// Closed-subgroup lattice: Z2 < Z4 < Pin2 and Z2 < S1 < Pin2, Z4 not in S1.
bool is_subgroup(GroupTag h, GroupTag k);

struct Monomial {
    int s = 0;  // 0 or 1
    int j = 0;  // 0..3

    constexpr int index() const { return 4 * s + j; }
    static constexpr Monomial from_index(int i) { return {i / 4, i % 4}; }
    constexpr int degree() const { return s; }
    bool operator==(const Monomial&) const = default;
};

class AlgebraElement {
public:
    explicit AlgebraElement(GroupTag group = GroupTag::Pin2) : group_(group) {}

    static AlgebraElement from_mask(std::uint8_t mask, GroupTag group = GroupTag::Pin2);
    static AlgebraElement monomial(int s, int j, GroupTag group = GroupTag::Pin2);
    static AlgebraElement one(GroupTag group = GroupTag::Pin2) { return monomial(0, 0, group); }

    GroupTag group() const { return group_; }
    std::uint8_t mask() const { return mask_; }
    bool coefficient(int s, int j) const { return (mask_ >> (4 * s + j)) & 1U; }
    bool is_zero() const { return mask_ == 0; }
    std::vector<Monomial> monomials() const;

    // Degree-0 (no s) and degree-1 (s j^b) parts.
    AlgebraElement part(int degree) const;
    // Degree if nonzero and homogeneous.
    std::optional<int> degree() const;

    // Same coefficients, viewed in the algebra of another group. Throws if the
    // element does not lie in that group's subalgebra.
    AlgebraElement in_group(GroupTag group) const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    bool operator==(const AlgebraElement& other) const = default;

    // Rendering such as "s j^3 + j"; zero renders as "0".
    std::string to_string() const;

private:
    std::uint8_t mask_ = 0;
    GroupTag group_;
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

// Derivation with d(s) = 1 + j^2 and d(j) = 0.
AlgebraElement boundary(const AlgebraElement& x);

// Anti-automorphism induced by inversion g -> g^{-1}: j -> j^3, s -> s j^2.
AlgebraElement inversion(const AlgebraElement& x);

// Monomial table helpers; -1 marks a zero product.
int monomial_product(int a, int b);
std::uint8_t monomial_boundary(int m);
int monomial_inversion(int m);

// Monomial basis of the subgroup's chain algebra inside the Pin(2) algebra.
const std::vector<Monomial>& subalgebra_basis(GroupTag h);
// Representatives r_i with A = sum_i A_H r_i (A free as a left A_H-module).
const std::vector<Monomial>& coset_representatives(GroupTag h);
bool in_subalgebra(const AlgebraElement& x, GroupTag h);

struct CosetDecomposition {
    GroupTag subgroup;
    std::vector<AlgebraElement> coefficients;  // aligned with coset_representatives
};

// Unique expansion x = sum_i a_i r_i with a_i in the subalgebra of h.
CosetDecomposition decompose_over(const AlgebraElement& x, GroupTag h);
AlgebraElement recombine(const CosetDecomposition& d);

// For a single monomial m: m = b * r_rep with b a monomial of the subalgebra.
struct MonomialSplit {
    int rep;
    int coefficient;
};
MonomialSplit split_monomial(int m, GroupTag h);

}  // namespace swf
