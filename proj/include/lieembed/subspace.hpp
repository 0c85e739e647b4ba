#pragma once

#include "lieembed/linalg.hpp"

#include <ostream>
#include <vector>

namespace lieembed {

/// Linear subspace of T^n stored by its reduced row echelon basis, so two
/// subspaces are equal exactly when their stored bases are.
template <class T>
class BasicSubspace {
public:
    BasicSubspace() = default;
    explicit BasicSubspace(std::size_t ambient) : ambient_(ambient) {}

    static BasicSubspace span(std::size_t ambient, const std::vector<Vec<T>>& vectors) {
        BasicSubspace s(ambient);
        if (vectors.empty()) return s;
        auto r = rref(Matrix<T>::from_rows(vectors, ambient));
        for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
        s.pivots_ = r.pivots;
        return s;
    }
    static BasicSubspace full(std::size_t ambient) {
        std::vector<Vec<T>> e;
        for (std::size_t i = 0; i < ambient; ++i) e.push_back(unit_vec<T>(ambient, i));
        return span(ambient, e);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec<T>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Matrix<T> matrix() const { return Matrix<T>::from_rows(basis_, ambient_); }

    /// Coordinates of v in the stored basis, or nullopt when v is outside.
    std::optional<Vec<T>> coords(const Vec<T>& v) const {
        Vec<T> c = pivot_coordinates(v, pivots_);
        Vec<T> back = combine(c);
        if (back != v) return std::nullopt;
        return c;
    }
    bool contains(const Vec<T>& v) const { return coords(v).has_value(); }
    bool contains(const BasicSubspace& o) const {
        for (const auto& v : o.basis_)
            if (!contains(v)) return false;
        return true;
    }

    Vec<T> combine(const Vec<T>& c) const {
        Vec<T> v(ambient_, T(0));
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!basis_[i][j].is_zero()) v[j] += c[i] * basis_[i][j];
        }
        return v;
    }

    BasicSubspace operator+(const BasicSubspace& o) const {
        std::vector<Vec<T>> all = basis_;
        all.insert(all.end(), o.basis_.begin(), o.basis_.end());
        return span(ambient_, all);
    }
    BasicSubspace with(const std::vector<Vec<T>>& extra) const {
        std::vector<Vec<T>> all = basis_;
        all.insert(all.end(), extra.begin(), extra.end());
        return span(ambient_, all);
    }

    /// Rows spanning the annihilator: v is in this subspace iff every row
    /// dotted with v vanishes.
    std::vector<Vec<T>> annihilator() const {
        if (basis_.empty()) {
            std::vector<Vec<T>> e;
            for (std::size_t i = 0; i < ambient_; ++i) e.push_back(unit_vec<T>(ambient_, i));
            return e;
        }
        return kernel(matrix());
    }

    BasicSubspace intersect(const BasicSubspace& o) const {
        if (basis_.empty() || o.basis_.empty()) return BasicSubspace(ambient_);
        auto ann = o.annihilator();
        if (ann.empty()) return *this;
        Matrix<T> q = Matrix<T>::from_rows(ann, ambient_);
        Matrix<T> m = q * matrix().transpose();
        std::vector<Vec<T>> out;
        for (const auto& c : kernel(m)) out.push_back(combine(c));
        return span(ambient_, out);
    }

    /// Vectors from `candidates`, in order, that extend this subspace.
    std::vector<Vec<T>> complement_from(const std::vector<Vec<T>>& candidates) const {
        std::vector<Vec<T>> picked;
        BasicSubspace acc = *this;
        for (const auto& v : candidates) {
            if (acc.contains(v)) continue;
            picked.push_back(v);
            acc = acc.with({v});
        }
        return picked;
    }

    friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec<T>> basis_;
    std::vector<std::size_t> pivots_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const BasicSubspace<T>& s) {
    os << "<";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < s.ambient(); ++j) os << (j ? " " : "") << s.basis()[i][j];
    }
    return os << ">";
}

using Subspace = BasicSubspace<Rational>;
using KSubspace = BasicSubspace<Scalar>;

inline KSubspace to_scalar(const Subspace& s) {
    std::vector<KVec> rows;
    for (const auto& v : s.basis()) rows.push_back(to_scalar(v));
    return KSubspace::span(s.ambient(), rows);
}

}  // namespace lieembed
