#pragma once

#include "lieembed/matrix.hpp"

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace lieembed {

using Element = QVec;

/// One nonzero bracket [b_i, b_j] = sum_k c_k b_k with i < j.
struct BracketEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<std::pair<std::size_t, Rational>> terms;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Builds the table from entries with i < j (antisymmetry implied) and
    /// validates Jacobi; throws InvariantViolation on failure unless
    /// `validate` is false.
    LieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& entries, bool validate = true);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a basis name; throws ParseError when unknown.
    std::size_t index_of(std::string_view name) const;

    Element basis(std::size_t i) const { return unit_vec<Rational>(dim(), i); }
    Element zero() const { return zero_vec<Rational>(dim()); }
    /// [b_i, b_j]
    const QVec& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    template <class T>
    Vec<T> bracket(const Vec<T>& x, const Vec<T>& y) const {
        const std::size_t n = dim();
        Vec<T> out(n, T(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || y[j].is_zero()) continue;
                const QVec& c = table_[i * n + j];
                if (is_zero_vec(c)) continue;
                T f = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!c[k].is_zero()) out[k] += f * T(c[k]);
            }
        }
        return out;
    }

    /// Column j of ad(x) is [x, b_j].
    template <class T>
    Matrix<T> ad(const Vec<T>& x) const {
        const std::size_t n = dim();
        Matrix<T> m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const QVec& c = table_[i * n + j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!c[k].is_zero()) m(k, j) += x[i] * T(c[k]);
            }
        }
        return m;
    }

    /// Basis triples (i<j<k) violating Jacobi.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> jacobi_failures() const;
    /// Nonzero entries with i < j, in (i, j) order.
    std::vector<BracketEntry> entries() const;

    /// "e8+e10", "-e15+e4", "1/2*e9", "0".
    std::string format(const QVec& v) const;
    std::string format(const KVec& v) const;
    /// Parses a linear combination of basis names, e.g. "2*e12+e5" or "-X4 + 1/2 X11".
    Element parse_element(std::string_view text) const;
    /// Comma-separated list of elements.
    std::vector<Element> parse_elements(std::string_view text) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    std::vector<std::string> names_;
    std::vector<QVec> table_;
};

}  // namespace lieembed
