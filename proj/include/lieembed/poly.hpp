#pragma once

#include "lieembed/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieembed {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const T& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)

    static Poly monomial(std::size_t deg, T coeff = T(1)) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = std::move(coeff);
        return Poly(std::move(c));
    }
    /// t - root
    static Poly linear(const T& root) { return Poly(std::vector<T>{-root, T(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& lead() const { return c_.back(); }

    Poly monic() const {
        if (is_zero()) return *this;
        T inv = lead().inverse();
        Poly r = *this;
        for (auto& x : r.c_) x *= inv;
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
        return Poly(std::move(d));
    }

    T eval(const T& x) const {
        T r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Matrix<T> eval(const Matrix<T>& m) const {
        Matrix<T> r(m.rows(), m.cols());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r = r * m;
            for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) += *it;
        }
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Quotient and remainder of Euclidean division over a field.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<T> rem = a.c_;
        std::vector<T> q(a.c_.size() - b.c_.size() + 1, T(0));
        T inv = b.lead().inverse();
        for (std::size_t k = q.size(); k-- > 0;) {
            T f = rem[k + b.c_.size() - 1] * inv;
            q[k] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
        }
        return {Poly(std::move(q)), Poly(std::move(rem))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    /// Division that must be exact.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("Poly::exact_div: nonzero remainder");
        return q;
    }

    /// Monic gcd (zero if both are zero).
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// "t^2 + 1"-style text, highest degree first.
    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            std::string cs = c_[k].str();
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (neg) cs = cs.substr(1);
            if (!s.empty()) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            bool paren = cs.find_first_of("+-", 1) != std::string::npos;
            if (k == 0) {
                s += paren ? "(" + cs + ")" : cs;
                continue;
            }
            if (cs != "1") s += (paren ? "(" + cs + ")" : cs) + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<T> c_;
};

using QPoly = Poly<Rational>;
using KPoly = Poly<Scalar>;

/// det(tI - m), by fraction-free elimination over Q[t].
QPoly char_poly(const QMatrix& m);

/// Squarefree part p / gcd(p, p'), monic.
QPoly squarefree_part(const QPoly& p);

/// Yun's squarefree decomposition: monic factors f_1, f_2, ... with
/// p = lead * prod f_i^i, each f_i squarefree and pairwise coprime.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

/// Number of distinct real roots of p (any p != 0), via Sturm sequences.
std::size_t count_real_roots(const QPoly& p);
/// Number of distinct real roots in the open interval (lo, hi); p(lo), p(hi) != 0.
std::size_t count_real_roots_between(const QPoly& p, const Rational& lo, const Rational& hi);
/// Number of distinct real roots below zero (p(0) != 0).
std::size_t count_negative_roots(const QPoly& p);

struct Eigenvalue {
    Scalar value;
    std::size_t multiplicity = 0;
};

/// Roots of p with multiplicity over Q or a single quadratic extension,
/// sorted by the structural scalar order. Throws ExtensionDegreeTooHigh.
std::vector<Eigenvalue> poly_roots(const QPoly& p);

/// Eigenvalues of a square rational matrix (roots of its characteristic polynomial).
std::vector<Eigenvalue> eigenvalues(const QMatrix& m);

}  // namespace lieembed
