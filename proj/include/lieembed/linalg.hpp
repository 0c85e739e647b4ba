#pragma once

#include "lieembed/matrix.hpp"

#include <optional>
#include <vector>

namespace lieembed {

template <class T>
struct Rref {
    Matrix<T> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
template <class T>
Rref<T> rref(Matrix<T> m) {
    Rref<T> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        T inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).rank;
}

/// Nonzero rows of the RREF of the given row vectors.
template <class T>
std::vector<Vec<T>> rref_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
    auto r = rref(Matrix<T>::from_rows(rows, cols));
    std::vector<Vec<T>> out;
    for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.reduced.row(i));
    return out;
}

/// Null space basis, returned in reduced row echelon form.
template <class T>
std::vector<Vec<T>> kernel(const Matrix<T>& m) {
    auto r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec<T> v(n, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;
    return rref_rows(basis, n);
}

/// Some x with m x = rhs (free variables set to zero), or nullopt.
template <class T>
std::optional<Vec<T>> solve_linear(const Matrix<T>& m, const Vec<T>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    Matrix<T> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    auto r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vec<T> x(m.cols(), T(0));
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
    return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto r = rref(std::move(aug));
    if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        T inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Values of v at the pivot columns of an RREF basis: the coordinates of v
/// in that basis when v lies in the span (unchecked).
template <class T>
Vec<T> pivot_coordinates(const Vec<T>& v, const std::vector<std::size_t>& pivots) {
    Vec<T> c;
    c.reserve(pivots.size());
    for (auto p : pivots) c.push_back(v[p]);
    return c;
}

/// Signature (n_pos, n_neg, n_zero) of a symmetric rational matrix by
/// symmetric congruence.
struct Signature {
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    std::size_t n_zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};
Signature congruence_signature(QMatrix m);

}  // namespace lieembed
