#pragma once

// Finite chain complexes of type SWF over the Pin(2) chain algebra.
//
// A complex at level s has an S^1-fixed part modelled on the reduced cells of
// the one-point compactification of R~^s: a cell c0 in degree 0 and, for
// k = 1..s, a pair {c_k, j c_k} in degree k, with
//   d(c_1) = c_0,  d(c_k) = (1 + j) c_{k-1}  (k >= 2),
// j^2 acting trivially and s acting as zero. The remaining cells are free:
// each free generator x of degree k spans a copy of the algebra, with cells
// mu * x for the eight monomials mu.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swf/group_algebra.hpp"
#include "swf/rational.hpp"

namespace swf {

struct FreeGenerator {
    std::string name;
    int degree = 0;
};

struct Target {
    enum class Kind { Free, Fixed };
    Kind kind = Kind::Free;
    int index = 0;  // generator index, or k for the fixed cell c_k

    static Target free(int gen) { return {Kind::Free, gen}; }
    static Target fixed(int k) { return {Kind::Fixed, k}; }
    bool operator==(const Target&) const = default;
};

struct Term {
    AlgebraElement coef;
    Target target;
};

struct SwfComplex {
    std::string name;
    int level = 0;
    std::vector<FreeGenerator> generators;
    std::vector<std::vector<Term>> differential;  // aligned with generators

    int generator_index(std::string_view gen) const;  // -1 if absent
    int top_free_degree() const;                       // -1 without free generators
    int top_cell_degree() const;
};

// Flat F2-basis of the underlying chain complex: fixed cells first
// (c0, c1, j c1, c2, j c2, ...), then eight cells per free generator.
class CellModel {
public:
    explicit CellModel(const SwfComplex& c);

    int size() const { return static_cast<int>(degree_.size()); }
    int fixed_count() const { return fixed_count_; }
    int level() const { return level_; }
    int degree(int cell) const { return degree_[cell]; }
    bool is_fixed(int cell) const { return cell < fixed_count_; }
    int max_degree() const { return max_degree_; }

    int fixed_cell(int k, int p) const { return k == 0 ? 0 : 1 + 2 * (k - 1) + (p & 1); }
    int free_cell(int gen, int mono) const { return fixed_count_ + 8 * gen + mono; }

    // Image of a cell under a monomial of the algebra, or nothing if zero.
    std::optional<int> act(int mono, int cell) const;
    // Cells in the boundary of a cell, each appearing once.
    const std::vector<int>& boundary(int cell) const { return boundary_[cell]; }
    // Cells of a given degree in index order.
    std::vector<int> cells_of_degree(int d) const;

    std::string cell_name(int cell) const;
    // Renders a chain as a module element, e.g. "(1 + j^2) x1 + j c2".
    std::string render(const std::vector<int>& cells) const;

private:
    int level_;
    int fixed_count_;
    int max_degree_ = 0;
    std::vector<int> degree_;
    std::vector<std::vector<int>> boundary_;
    std::vector<std::string> gen_names_;
};

// Empty when the complex is valid; otherwise one message per violation.
std::vector<std::string> validate(const SwfComplex& c);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

void require_valid(const SwfComplex& c);

// The level-s sphere: the fixed part alone.
SwfComplex fixed_subcomplex(const SwfComplex& c);
SwfComplex sphere_complex(int level);

// Smash product with the one-point compactification of R~, at chain level.
SwfComplex suspend_rtilde(const SwfComplex& c);

// Formal desuspension (X, m, n) by m copies of R~ and n copies of H.
struct StableClass {
    SwfComplex complex;
    std::int64_t m = 0;
    Rational n{0};

    // m + 4n: cohomology of the class is that of X shifted down by this.
    std::int64_t grading_shift() const;
    // s/2 - m/2 - 2n modulo 2.
    Rational mu() const;
};

StableClass desuspend(const SwfComplex& c, std::int64_t m, const Rational& n);

// Random valid complex: generator degrees drawn uniformly, each differential
// drawn uniformly from the cycles of the complex built so far.
SwfComplex random_complex(std::uint64_t seed, int max_gens, int max_degree, int max_level = 0);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Strict JSON file format; see README. Throws ParseError.
StableClass parse_complex_json(std::string_view text);
StableClass read_complex_file(const std::string& path);
// Canonical serialization (two-space indentation, trailing newline).
std::string serialize_complex(const StableClass& sc);

}  // namespace swf
