#pragma once

// Correction terms of a stable class, read off the Borel cohomology modules
// of its underlying complex, and the relations among them.
//
// Raw quantities (a, b, c, d, d-bar, d-under and the kernel-restricted
// minima) are degrees in the cohomology of the unstable complex X at level s.
// Every named invariant is half a raw degree, minus m/2 + 2n.

#include <optional>
#include <string>
#include <vector>

#include "swf/borel.hpp"
#include "swf/complex.hpp"
#include "swf/rational.hpp"
#include "swf/verdict.hpp"

namespace swf {

// A class of minimal degree with the required property.
struct ClassWitness {
    int degree = 0;  // degree of the class
    int value = 0;   // raw quantity it realizes, after any adjustment
    gf2::Vector vector;
};

// Minimal degree r = residue (mod modulus) carrying a class x with P^l x != 0
// for all l, where P is the module's periodicity generator, subject to
// kernel^power x = 0 when a kernel operator is given. `sigma` is a degree from
// which the module is P-periodic; throws std::out_of_range if the window is
// too small to certify, std::logic_error if no class exists in the window.
struct TowerQuery {
    int residue = 0;
    int modulus = 1;
    std::optional<RingGenerator> kernel;
    int kernel_power = 1;
};

ClassWitness min_nontorsion(const GradedModule& m, int sigma, const TowerQuery& query);
bool is_nontorsion(const GradedModule& m, int sigma, int degree, const gf2::Vector& x);

struct AbcValues {
    ClassWitness a, b, c;  // values carry the -0, -1, -2 adjustments
};
AbcValues abc(const GradedModule& pin2, int level, int sigma);
ClassWitness d_invariant(const GradedModule& s1, int sigma);
// d-bar and d-under from the Z4 module; d-under carries the -1 adjustment.
std::pair<ClassWitness, ClassWitness> dbar_dunder(const GradedModule& z4, int level, int sigma);

struct FroyshovEntry {
    GroupTag group;
    std::string e;
    Rational value;
    ClassWitness witness;
};

// Homogeneous elements of H*(BH) modulo the periodicity generator.
const std::vector<std::string>& froyshov_elements(GroupTag h);

struct InvariantReport {
    std::string complex;
    std::int64_t m = 0;
    Rational n{0};
    Rational mu{0};

    Rational a, b, c, d, d_bar, d_under;
    Rational alpha, beta, gamma, delta, delta_bar, delta_under;
    Rational delta_G, delta_G_under, delta_G_bar;
    Rational delta_Z2;
    Rational delta_Z4;  // the Q-kernel formula for delta

    struct Named {
        std::string name;
        ClassWitness witness;
    };
    std::vector<Named> witnesses;  // one per invariant above
    std::vector<FroyshovEntry> froyshov;

    const ClassWitness& witness(const std::string& name) const;
    Rational froyshov_value(GroupTag h, const std::string& e) const;
};

// Value of a raw degree for a stable class: raw / 2 - m / 2 - 2n.
Rational shifted(const StableClass& sc, int raw);

InvariantReport manolescu_invariants(const StableClass& sc, const BorelSuite& suite);
InvariantReport manolescu_invariants(const StableClass& sc, int max_degree);

// delta_{H,e} via the fixed-point inclusion; e as listed by froyshov_elements.
FroyshovEntry froyshov_general(const StableClass& sc, const BorelSuite& suite, GroupTag h, const std::string& e);

// Invariant attached to (Q_{4m}, e) through its reduction to Pin(2) (m even)
// or Z/4 (m odd). Throws std::invalid_argument for m < 2 or an unknown e.
Rational q4m_invariants(const InvariantReport& r, int m, const std::string& e);
const std::vector<std::string>& q4m_elements(int m);

std::vector<Verdict> check_theorems(const InvariantReport& r);

}  // namespace swf
