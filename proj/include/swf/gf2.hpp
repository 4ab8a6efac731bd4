#pragma once

// Dense bit-packed linear algebra over the two-element field.
//
// Echelon conventions used throughout: the lead of a vector is its lowest set
// index, and every echelonized basis is fully reduced (each lead appears in
// exactly one basis vector) and sorted by ascending lead.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace swf::gf2 {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n);

    static Vector unit(std::size_t n, std::size_t i);
    static Vector from_string(const std::string& bits);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    bool is_zero() const;
    std::optional<std::size_t> lead() const;
    std::optional<std::size_t> next_set(std::size_t from) const;
    std::size_t popcount() const;
    std::vector<std::size_t> support() const;
    bool dot(const Vector& other) const;

    Vector& operator^=(const Vector& other);
    friend Vector operator^(Vector a, const Vector& b) { return a ^= b; }
    bool operator==(const Vector& other) const = default;

    // Lexicographic comparison with index 0 most significant.
    bool lex_less(const Vector& other) const;

    std::string to_string() const;

private:
    friend class Matrix;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value = true);
    void flip(std::size_t i, std::size_t j);

    const Vector& row(std::size_t i) const { return data_[i]; }
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    Vector apply(const Vector& x) const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    bool operator==(const Matrix& other) const = default;

    std::vector<std::string> to_strings() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Vector> data_;
};

std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}, echelonized.
std::vector<Vector> kernel_basis(const Matrix& m);

// Basis of the column space of m, echelonized.
std::vector<Vector> image_basis(const Matrix& m);

// Lexicographically least x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Basis of {x : m x lies in span(w)}, echelonized.
std::vector<Vector> preimage_space(const Matrix& m, const std::vector<Vector>& w);

std::vector<Vector> echelonize(std::vector<Vector> vectors);

// Incrementally built reduced echelon basis. Every stored row carries a tag
// vector recording which inserted vectors it is a combination of, so reduction
// yields coordinates as a by-product.
class EchelonBasis {
public:
    EchelonBasis(std::size_t ambient, std::size_t tag_width);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    // Inserts v with the given tag; returns false if v was already in the span.
    bool insert(const Vector& v, const Vector& tag);
    bool insert(const Vector& v);

    struct Reduction {
        Vector residual;
        Vector tag;
    };
    Reduction reduce(const Vector& v) const;
    bool contains(const Vector& v) const;

private:
    std::size_t ambient_;
    std::size_t tag_width_;
    std::vector<Vector> rows_;
    std::vector<Vector> tags_;
    std::vector<int> pivot_row_;  // ambient index -> row or -1
};

}  // namespace swf::gf2
