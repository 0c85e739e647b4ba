#include "lieembed/rational.hpp"

#include "lieembed/errors.hpp"

#include <cctype>

namespace lieembed {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        }
    }
    mpz_class v(std::string(text.substr(i)), 10);
    return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text), mpz_class(1));
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / value_));
}

std::size_t Rational::hash() const {
    std::size_t h = std::hash<std::string>{}(value_.get_num().get_str(16));
    return h ^ (std::hash<std::string>{}(value_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace lieembed
