#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace lieembed {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p", "-p", "p/q". Throws ParseError.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", with "/q" omitted when q = 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational inverse() const;

    std::size_t hash() const;

private:
    mpq_class value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lieembed

template <>
struct std::hash<lieembed::Rational> {
    std::size_t operator()(const lieembed::Rational& r) const noexcept { return r.hash(); }
};
