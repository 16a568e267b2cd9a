#include "bolkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bolkit {

bool vec_is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& v)
{
    Vec r(v.size());
    if (c.is_zero())
        return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

Vec vec_zero(std::size_t n) { return Vec(n); }

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const { return vec_is_zero(a_); }

bool Matrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& y = o.at(k, j);
                if (!y.is_zero())
                    r.at(i, j) += x * y;
            }
        }
    return r;
}

Matrix Matrix::operator-() const
{
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = -a_[i];
    return r;
}

Matrix Matrix::scaled(const Rational& c) const
{
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = c * a_[i];
    return r;
}

Vec Matrix::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix apply shape mismatch");
    Vec r(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t rr = 0; rr < rows_; ++rr) {
            const Rational& x = at(rr, c);
            if (!x.is_zero())
                r[rr] += x * v[c];
        }
    }
    return r;
}

bool Tensor3::is_zero() const { return vec_is_zero(a_); }
bool Tensor4::is_zero() const { return vec_is_zero(a_); }

std::vector<std::size_t> row_reduce(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(p, c), m.at(row, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero())
                continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Rational determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m.at(p, col).is_zero())
            ++p;
        if (p == n)
            return Rational(0);
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m.at(p, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero())
                continue;
            Rational f = m.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

std::vector<Vec> nullspace(const Matrix& a)
{
    Matrix m = a;
    std::vector<std::size_t> pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix stack_rows(const std::vector<Vec>& vs)
{
    if (vs.empty())
        return Matrix();
    Matrix m(vs.size(), vs[0].size());
    for (std::size_t r = 0; r < vs.size(); ++r) {
        if (vs[r].size() != vs[0].size())
            throw std::invalid_argument("stack_rows: ragged input");
        for (std::size_t c = 0; c < vs[r].size(); ++c)
            m.at(r, c) = vs[r][c];
    }
    return m;
}

bool subspace_equal(const std::vector<Vec>& b1, const std::vector<Vec>& b2)
{
    if (b1.empty() && b2.empty())
        return true;
    if (b1.empty())
        return rank(stack_rows(b2)) == 0;
    if (b2.empty())
        return rank(stack_rows(b1)) == 0;
    if (b1[0].size() != b2[0].size())
        throw std::invalid_argument("subspace_equal: ambient dimension mismatch");

    std::size_t r1 = rank(stack_rows(b1));
    std::size_t r2 = rank(stack_rows(b2));
    if (r1 != r2)
        return false;
    std::vector<Vec> joint = b1;
    joint.insert(joint.end(), b2.begin(), b2.end());
    return rank(stack_rows(joint)) == r1;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v)
{
    if (vec_is_zero(v))
        return true;
    if (basis.empty())
        return false;
    std::size_t r = rank(stack_rows(basis));
    std::vector<Vec> joint = basis;
    joint.push_back(v);
    return rank(stack_rows(joint)) == r;
}

bool exists_nondegenerate(const std::vector<Matrix>& basis)
{
    if (basis.empty())
        return false;
    const std::size_t n = basis[0].rows();
    const std::size_t k = basis.size();

    // Single-element shortcut before walking the grid.
    for (const Matrix& g : basis)
        if (!determinant(g).is_zero())
            return true;

    std::vector<std::size_t> t(k, 0);
    for (;;) {
        Matrix g(n, n);
        for (std::size_t i = 0; i < k; ++i)
            if (t[i] != 0)
                g = g + basis[i].scaled(Rational(static_cast<long>(t[i])));
        if (!determinant(g).is_zero())
            return true;
        std::size_t pos = 0;
        while (pos < k) {
            if (++t[pos] <= n)
                break;
            t[pos] = 0;
            ++pos;
        }
        if (pos == k)
            return false;
    }
}

} // namespace bolkit
