#pragma once

// Dense exact matrices over Scalar or CScalar and Gaussian elimination.

#include "semiflat/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace semiflat {

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const CScalar& x) { return x.is_zero(); }

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw MathError("ragged matrix literal");
            for (const auto& x : row)
                data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    // Elementary matrix E_ij (0-based).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j)
    {
        Matrix m(n, n);
        m(i, j) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!semiflat::is_zero(x))
                return false;
        return true;
    }

    T trace() const
    {
        T t{};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            t += (*this)(i, i);
        return t;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x = -x;
        return r;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s)
    {
        for (auto& x : data_)
            x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw MathError("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (semiflat::is_zero(x))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!semiflat::is_zero(b(k, j)))
                        r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size())
            throw MathError("matrix-vector shape mismatch");
        std::vector<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!semiflat::is_zero(a(i, k)) && !semiflat::is_zero(v[k]))
                    r[i] += a(i, k) * v[k];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!(a.data_[k] == b.data_[k]))
                return false;
        return true;
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j)
                s += (j ? "," : "") + (*this)(i, j).str();
            s += "]";
        }
        return s + "]";
    }

private:
    void check_same(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw MathError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RMatrix = Matrix<Scalar>;
using CMatrix = Matrix<CScalar>;

template <class T>
struct Echelon {
    Matrix<T> reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    T det{1};                         // determinant if square
};

// Gauss-Jordan elimination; the pivot is the first nonzero entry of the column
// scanning rows top to bottom.
template <class T>
Echelon<T> row_reduce(Matrix<T> m)
{
    Echelon<T> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
            out.det = -out.det;
        }
        const T piv = m(r, c);
        out.det *= piv;
        const T inv = piv.inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(r, j)))
                m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j)))
                    m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    if (m.rows() != m.cols() || out.pivots.size() != m.rows())
        out.det = T(0);
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m)
{
    return row_reduce(m).pivots.size();
}

template <class T>
T determinant(const Matrix<T>& m)
{
    if (m.rows() != m.cols())
        throw MathError("determinant of a non-square matrix");
    return row_reduce(m).det;
}

// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m)
{
    const auto e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<T> v(m.cols(), T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
std::optional<Matrix<T>> try_inverse(const Matrix<T>& m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw MathError("inverse of a non-square matrix");
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    const auto e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m)
{
    auto inv = try_inverse(m);
    if (!inv)
        throw MathError("singular matrix");
    return *inv;
}

// Leading principal minor of order k (1 <= k <= n).
template <class T>
T leading_minor(const Matrix<T>& m, std::size_t k)
{
    Matrix<T> s(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            s(i, j) = m(i, j);
    return determinant(s);
}

inline CMatrix complexify(const RMatrix& m)
{
    CMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = CScalar(m(i, j));
    return c;
}

// Real part of a complex matrix; nullopt when some entry is not real.
inline std::optional<RMatrix> real_matrix(const CMatrix& m)
{
    RMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_real())
                return std::nullopt;
            r(i, j) = m(i, j).re();
        }
    return r;
}

inline CMatrix conj(const CMatrix& m)
{
    CMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).conj();
    return r;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b)
{
    return a * b - b * a;
}

}  // namespace semiflat
