#pragma once

#include "lieembed/rational.hpp"
#include "lieembed/scalar.hpp"

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieembed {

template <class T>
using Vec = std::vector<T>;

template <class T>
bool is_zero_vec(const Vec<T>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class T>
Vec<T> zero_vec(std::size_t n) {
    return Vec<T>(n, T(0));
}

template <class T>
Vec<T> unit_vec(std::size_t n, std::size_t i) {
    Vec<T> v(n, T(0));
    v[i] = T(1);
    return v;
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class T>
Vec<T>& operator+=(Vec<T>& a, const Vec<T>& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class T>
Vec<T>& operator-=(Vec<T>& a, const Vec<T>& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class T>
Vec<T> operator-(Vec<T> a) {
    for (auto& x : a) x = -x;
    return a;
}

template <class T>
Vec<T> scaled(const T& c, Vec<T> a) {
    for (auto& x : a) x *= c;
    return a;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec<Scalar> to_scalar(const Vec<Rational>& v) {
    Vec<Scalar> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    /// Rows must all have length cols (cols is needed when rows is empty).
    static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_cols(const std::vector<Vec<T>>& cols, std::size_t rows) {
        return from_rows(cols, rows).transpose();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<T> row(std::size_t i) const { return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    Vec<T> col(std::size_t j) const {
        Vec<T> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    std::vector<Vec<T>> row_list() const {
        std::vector<Vec<T>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }
    void set_col(std::size_t j, const Vec<T>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    Vec<T> apply(const Vec<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
        Vec<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& c) {
        for (auto& x : data_) x *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend Matrix operator*(const T& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = U((*this)(i, j));
        return r;
    }

    /// Stacks b below a.
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ == 0) return b;
        if (b.rows_ == 0) return a;
        if (a.cols_ != b.cols_) throw std::invalid_argument("Matrix::vstack: column mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        std::copy(a.data_.begin(), a.data_.end(), r.data_.begin());
        std::copy(b.data_.begin(), b.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
            s += "]";
        }
        return s + "]";
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using KMatrix = Matrix<Scalar>;
using QVec = Vec<Rational>;
using KVec = Vec<Scalar>;

}  // namespace lieembed
