#include "lieembed/scalar.hpp"

#include "lieembed/errors.hpp"
#include "lieembed/numtheory.hpp"

#include <stdexcept>

namespace lieembed {

SquarefreeSplit squarefree_split(std::int64_t n) {
    if (n == 0) return {0, 0};
    mpz_class root;
    mpz_class sf = numtheory::squarefree_part(mpz_class(static_cast<long>(n)), &root);
    return {sf.get_si(), root.get_si()};
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)) {
    if (b.is_zero() || d == 0) return;
    auto [sf, root] = squarefree_split(d);
    b *= Rational(static_cast<long>(root));
    if (sf == 1) {
        a_ += b;
        return;
    }
    b_ = std::move(b);
    d_ = sf;
}

const Rational& Scalar::to_rational() const {
    if (!is_rational()) throw std::logic_error("Scalar::to_rational on irrational value " + str());
    return a_;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    if (is_rational()) return Scalar(a_.inverse());
    Rational n = norm();
    Scalar r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    return r;
}

int Scalar::real_sign() const {
    if (!is_real()) throw std::logic_error("Scalar::real_sign on non-real value " + str());
    if (b_.is_zero()) return a_.sign();
    int sa = a_.sign();
    int sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = a_ * a_;
    Rational rhs = Rational(static_cast<long>(d_)) * b_ * b_;
    return lhs > rhs ? sa : sb;
}

int Scalar::re_sign() const {
    if (is_real()) return real_sign();
    return a_.sign();
}

int Scalar::im_sign() const {
    if (is_real()) return 0;
    return b_.sign();
}

bool Scalar::is_complex_positive() const {
    int re = re_sign();
    return re > 0 || (re == 0 && im_sign() > 0);
}

void Scalar::check_compatible(const Scalar& o) const {
    if (!b_.is_zero() && !o.b_.is_zero() && d_ != o.d_) {
        throw ExtensionDegreeTooHigh("mixed quadratic extensions sqrt(" + std::to_string(d_) + ") and sqrt(" +
                                     std::to_string(o.d_) + ")");
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_compatible(o);
    a_ += o.a_;
    if (!o.b_.is_zero()) {
        b_ += o.b_;
        d_ = o.d_;
    }
    if (b_.is_zero()) d_ = 0;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_compatible(o);
    if (o.b_.is_zero()) {
        a_ *= o.a_;
        b_ *= o.a_;
    } else if (b_.is_zero()) {
        b_ = a_ * o.b_;
        a_ *= o.a_;
        d_ = o.d_;
    } else {
        Rational na = a_ * o.a_ + Rational(static_cast<long>(d_)) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
    }
    if (b_.is_zero()) d_ = 0;
    return *this;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    if (auto c = x.d_ <=> y.d_; c != 0) return c;
    return x.b_ <=> y.b_;
}

std::string Scalar::str() const {
    if (b_.is_zero()) return a_.str();
    std::string out;
    if (!a_.is_zero()) out = a_.str();
    Rational mag = b_.abs();
    if (b_.sign() < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += d_ == -1 ? std::string("i") : "sqrt(" + std::to_string(d_) + ")";
    return out;
}

}  // namespace lieembed
