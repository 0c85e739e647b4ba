#pragma once

#include "lieembed/rational.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace lieembed {

/// Element a + b*sqrt(d) of a quadratic extension of Q.
///
/// d is a squarefree integer different from 0 and 1 whenever b != 0; a
/// rational value is stored with b = 0 and d = 0. Arithmetic between two
/// irrational values with different d throws ExtensionDegreeTooHigh, since
/// a computation may only ever use one extension.
class Scalar {
public:
    Scalar() = default;
    Scalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    Scalar(long v) : a_(v) {}                 // NOLINT(google-explicit-constructor)
    Scalar(int v) : a_(v) {}                  // NOLINT(google-explicit-constructor)
    /// a + b*sqrt(d) for any nonzero integer d; d is reduced to its
    /// squarefree part and perfect squares fold into a.
    Scalar(Rational a, Rational b, std::int64_t d);

    /// sqrt(d) * coeff.
    static Scalar sqrt_of(std::int64_t d, Rational coeff = Rational(1)) {
        return Scalar(Rational(0), std::move(coeff), d);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    /// Real when rational or d > 0.
    bool is_real() const { return b_.is_zero() || d_ > 0; }

    /// Requires is_rational().
    const Rational& to_rational() const;

    Scalar conj() const;
    Scalar inverse() const;
    /// Norm a^2 - d b^2, always rational.
    Rational norm() const { return a_ * a_ - Rational(static_cast<long>(d_)) * b_ * b_; }

    /// Sign of a real value (requires is_real()).
    int real_sign() const;
    /// Sign of the real part, for any value.
    int re_sign() const;
    /// Sign of the imaginary part (0 for real values).
    int im_sign() const;
    /// Complex positivity: Re > 0, or Re = 0 and Im > 0.
    bool is_complex_positive() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    /// Structural total order on (a, d, b); used only for canonical sorting.
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    /// "a", "a+b*sqrt(d)" style text, e.g. "1/2-3*sqrt(-2)".
    std::string str() const;

private:
    void check_compatible(const Scalar& o) const;

    Rational a_;
    Rational b_;
    std::int64_t d_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// Squarefree part of n together with the square factor: n = s^2 * squarefree.
struct SquarefreeSplit {
    std::int64_t squarefree;
    std::int64_t root;
};
SquarefreeSplit squarefree_split(std::int64_t n);

}  // namespace lieembed
