#ifndef BOLKIT_LINALG_HPP
#define BOLKIT_LINALG_HPP

#include "bolkit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bolkit {

using Vec = std::vector<Rational>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
Vec vec_zero(std::size_t n);

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_symmetric() const;
    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& c) const;
    Vec apply(const Vec& v) const;
    bool operator==(const Matrix& o) const = default;

    const std::vector<Rational>& data() const { return a_; }
    std::vector<Rational>& data() { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Dense rank-3 tensor, shape (d0, d1, d2).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
        : d0_(d0), d1_(d1), d2_(d2), a_(d0 * d1 * d2) {}

    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k)
    { return a_[(i * d1_ + j) * d2_ + k]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const
    { return a_[(i * d1_ + j) * d2_ + k]; }

    bool is_zero() const;
    bool operator==(const Tensor3& o) const = default;

    const std::vector<Rational>& data() const { return a_; }
    std::vector<Rational>& data() { return a_; }

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Rational> a_;
};

// Dense rank-4 tensor, shape (d0, d1, d2, d3).
class Tensor4 {
public:
    Tensor4() = default;
    Tensor4(std::size_t d0, std::size_t d1, std::size_t d2, std::size_t d3)
        : d0_(d0), d1_(d1), d2_(d2), d3_(d3), a_(d0 * d1 * d2 * d3) {}

    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }
    std::size_t dim3() const { return d3_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l)
    { return a_[((i * d1_ + j) * d2_ + k) * d3_ + l]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const
    { return a_[((i * d1_ + j) * d2_ + k) * d3_ + l]; }

    bool is_zero() const;
    bool operator==(const Tensor4& o) const = default;

    const std::vector<Rational>& data() const { return a_; }
    std::vector<Rational>& data() { return a_; }

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<Rational> a_;
};

// Reduces in place to row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

Rational determinant(Matrix m);

// Basis of {v : A v = 0}; empty for trivial nullspace.
std::vector<Vec> nullspace(const Matrix& a);

// Rows of the returned matrix are the given vectors.
Matrix stack_rows(const std::vector<Vec>& vs);

// span(b1) == span(b2), decided by rank comparisons. Throws
// std::invalid_argument on ambient-dimension mismatch.
bool subspace_equal(const std::vector<Vec>& b1, const std::vector<Vec>& b2);

// True iff v lies in span(basis).
bool in_span(const std::vector<Vec>& basis, const Vec& v);

// Decides whether some linear combination of the given symmetric Gram
// matrices is nondegenerate. det(sum t_i G_i) is a polynomial of degree
// <= n in each t_i, so it vanishes identically iff it vanishes on the
// grid {0,...,n}^k.
bool exists_nondegenerate(const std::vector<Matrix>& basis);

} // namespace bolkit

#endif
