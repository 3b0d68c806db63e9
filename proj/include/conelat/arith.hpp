#pragma once

// Exact scalar, vector and dense matrix types shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace conelat {

using Integer = mpz_class;
using Rational = mpq_class;

using ZVec = std::vector<Integer>;
using QVec = std::vector<Rational>;

// Raised for every violated precondition on mathematical input (dimension
// mismatch, degenerate form, non-isometry, ...).  The CLI maps it to exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const;
    std::vector<T> column(std::size_t j) const;

    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ZMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_)
            throw Error("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw Error("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t i) const
{
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <typename T>
std::vector<T> Matrix<T>::column(std::size_t j) const
{
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw Error("matrix product dimension mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v)
{
    if (a.cols() != v.size())
        throw Error("matrix-vector dimension mismatch");
    std::vector<T> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

// Conversions and small vector helpers.

QVec to_rational(const ZVec& v);
QMatrix to_rational(const ZMatrix& m);

bool is_integral(const QVec& v);
bool is_integral(const QMatrix& m);

// Throws if not integral.
ZVec to_integer(const QVec& v);
ZMatrix to_integer(const QMatrix& m);

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rational& c, const QVec& v);
QVec negate(const QVec& v);
bool is_zero(const QVec& v);
Rational dot(const QVec& a, const QVec& b);

// gcd of the entries; 0 for the zero vector.
Integer content(const ZVec& v);
// Least common multiple of denominators.
Integer denominator_lcm(const QVec& v);

// Positive primitive integer multiple of a nonzero rational vector
// (same direction, coordinates coprime).
ZVec primitive_direction(const QVec& v);

// First nonzero coordinate is positive.
bool lex_positive(const QVec& v);
bool lex_positive(const ZVec& v);

// Exact determinant, inverse and rank over Q (fraction-free where possible).
Rational determinant(const QMatrix& m);
QMatrix inverse(const QMatrix& m); // throws on singular input
std::size_t rank(const QMatrix& m);

// Solves a * x = b for square nonsingular a.
QVec solve(const QMatrix& a, const QVec& b);

// Basis of the right kernel {x : m x = 0} over Q, in reduced echelon form
// (free-variable coordinates are unit vectors).
std::vector<QVec> kernel(const QMatrix& m);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s); // "p", "p/q", "-p/q"

} // namespace conelat
