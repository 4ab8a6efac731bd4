#include "swf/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace swf::gf2 {

namespace {

constexpr std::size_t kWord = 64;

std::size_t words_for(std::size_t n) { return (n + kWord - 1) / kWord; }

// Row reduction to reduced echelon form with pivots chosen by ascending column.
// Returns the pivot column of each of the leading rows.
std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c))
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c))
                rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

Vector::Vector(std::size_t n) : n_(n), w_(words_for(n), 0) {}

Vector Vector::unit(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.set(i);
    return v;
}

Vector Vector::from_string(const std::string& bits)
{
    Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may contain only 0 and 1");
    }
    return v;
}

bool Vector::get(std::size_t i) const
{
    return (w_[i / kWord] >> (i % kWord)) & 1U;
}

void Vector::set(std::size_t i, bool value)
{
    const std::uint64_t bit = std::uint64_t{1} << (i % kWord);
    if (value)
        w_[i / kWord] |= bit;
    else
        w_[i / kWord] &= ~bit;
}

void Vector::flip(std::size_t i) { w_[i / kWord] ^= std::uint64_t{1} << (i % kWord); }

bool Vector::is_zero() const
{
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> Vector::lead() const
{
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] != 0)
            return k * kWord + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return std::nullopt;
}

std::optional<std::size_t> Vector::next_set(std::size_t from) const
{
    if (from >= n_)
        return std::nullopt;
    std::size_t k = from / kWord;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from % kWord));
    while (true) {
        if (w != 0)
            return k * kWord + static_cast<std::size_t>(std::countr_zero(w));
        if (++k == w_.size())
            return std::nullopt;
        w = w_[k];
    }
}

std::size_t Vector::popcount() const
{
    std::size_t n = 0;
    for (auto w : w_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> Vector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t w = w_[k];
        while (w != 0) {
            out.push_back(k * kWord + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

bool Vector::dot(const Vector& other) const
{
    if (n_ != other.n_)
        throw std::invalid_argument("dot: dimension mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k)
        acc ^= w_[k] & other.w_[k];
    return (std::popcount(acc) & 1) != 0;
}

Vector& Vector::operator^=(const Vector& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("vector sum: dimension mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k)
        w_[k] ^= other.w_[k];
    return *this;
}

bool Vector::lex_less(const Vector& other) const
{
    for (std::size_t k = 0; k < w_.size(); ++k) {
        const std::uint64_t diff = w_[k] ^ other.w_[k];
        if (diff != 0) {
            const auto bit = std::countr_zero(diff);
            return ((w_[k] >> bit) & 1U) == 0;
        }
    }
    return false;
}

std::string Vector::to_string() const
{
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, Vector(cols))
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("from_rows: row width mismatch");
        m.data_[i] = rows[i];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("from_columns: column height mismatch");
        for (auto i : cols[j].support())
            m.set(i, j);
    }
    return m;
}

bool Matrix::get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
void Matrix::set(std::size_t i, std::size_t j, bool value) { data_[i].set(j, value); }
void Matrix::flip(std::size_t i, std::size_t j) { data_[i].flip(j); }

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (data_[i].get(j))
            v.set(i);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (auto j : data_[i].support())
            t.set(j, i);
    return t;
}

Vector Matrix::apply(const Vector& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("apply: dimension mismatch");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (data_[i].dot(x))
            y.set(i);
    return y;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Vector& v) { return v.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (auto k : a.data_[i].support())
            c.data_[i] ^= b.data_[k];
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows_; ++i)
        c.data_[i] ^= b.data_[i];
    return c;
}

std::vector<std::string> Matrix::to_strings() const
{
    std::vector<std::string> out;
    out.reserve(rows_);
    for (const auto& r : data_)
        out.push_back(r.to_string());
    return out;
}

std::size_t rank(const Matrix& m)
{
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    return rref(rows, m.cols()).size();
}

std::vector<Vector> echelonize(std::vector<Vector> vectors)
{
    if (vectors.empty())
        return vectors;
    const std::size_t n = vectors.front().size();
    rref(vectors, n);
    return vectors;
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    const auto pivots = rref(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector x = Vector::unit(m.cols(), f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rows[r].get(f))
                x.set(pivots[r]);
        basis.push_back(std::move(x));
    }
    return echelonize(std::move(basis));
}

std::vector<Vector> image_basis(const Matrix& m)
{
    const Matrix t = m.transpose();
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < t.rows(); ++j)
        cols.push_back(t.row(j));
    if (cols.empty())
        return cols;
    rref(cols, m.rows());
    return cols;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong dimension");

    // Augment each row with its right-hand side bit in column cols().
    const std::size_t n = m.cols();
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vector r(n + 1);
        for (auto j : m.row(i).support())
            r.set(j);
        if (b.get(i))
            r.set(n);
        rows.push_back(std::move(r));
    }
    const auto pivots = rref(rows, n + 1);
    if (!pivots.empty() && pivots.back() == n)
        return std::nullopt;

    Vector x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (rows[r].get(n))
            x.set(pivots[r]);

    // Clearing the kernel leads gives the lexicographically least solution.
    for (const auto& k : kernel_basis(m)) {
        const auto l = *k.lead();
        if (x.get(l))
            x ^= k;
    }
    return x;
}

std::vector<Vector> preimage_space(const Matrix& m, const std::vector<Vector>& w)
{
    const std::size_t n = m.cols();
    Matrix aug(m.rows(), n + w.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto j : m.row(i).support())
            aug.set(i, j);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].size() != m.rows())
            throw std::invalid_argument("preimage_space: subspace vector has wrong dimension");
        for (auto i : w[k].support())
            aug.set(i, n + k);
    }
    std::vector<Vector> out;
    for (const auto& v : kernel_basis(aug)) {
        Vector x(n);
        for (auto i : v.support())
            if (i < n)
                x.set(i);
        if (!x.is_zero())
            out.push_back(std::move(x));
    }
    return echelonize(std::move(out));
}

EchelonBasis::EchelonBasis(std::size_t ambient, std::size_t tag_width)
    : ambient_(ambient), tag_width_(tag_width), pivot_row_(ambient, -1)
{
}

EchelonBasis::Reduction EchelonBasis::reduce(const Vector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("EchelonBasis::reduce: dimension mismatch");
    Reduction out{v, Vector(tag_width_)};
    // Rows have all bits at or above their pivot, so an ascending scan clears
    // every pivot position in a single pass.
    auto p = out.residual.next_set(0);
    while (p) {
        if (pivot_row_[*p] >= 0) {
            const auto r = static_cast<std::size_t>(pivot_row_[*p]);
            out.residual ^= rows_[r];
            out.tag ^= tags_[r];
        }
        p = out.residual.next_set(*p + 1);
    }
    return out;
}

bool EchelonBasis::contains(const Vector& v) const { return reduce(v).residual.is_zero(); }

bool EchelonBasis::insert(const Vector& v, const Vector& tag)
{
    if (tag.size() != tag_width_)
        throw std::invalid_argument("EchelonBasis::insert: tag width mismatch");
    auto red = reduce(v);
    if (red.residual.is_zero())
        return false;
    const auto l = *red.residual.lead();
    pivot_row_[l] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(red.residual));
    tags_.push_back(red.tag ^ tag);
    return true;
}

bool EchelonBasis::insert(const Vector& v) { return insert(v, Vector(tag_width_)); }

}  // namespace swf::gf2
