#include "lieembed/lie_algebra.hpp"

#include "lieembed/errors.hpp"

#include <cctype>

namespace lieembed {

LieAlgebra::LieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& entries, bool validate)
    : names_(std::move(names)) {
    const std::size_t n = names_.size();
    table_.assign(n * n, zero_vec<Rational>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (names_[a] == names_[b]) throw ParseError("duplicate basis name '" + names_[a] + "'");
    for (const auto& e : entries) {
        if (e.i >= n || e.j >= n) throw ParseError("bracket index out of range");
        if (e.i >= e.j) throw ParseError("bracket entries need i < j");
        QVec& c = table_[e.i * n + e.j];
        if (!is_zero_vec(c)) throw ParseError("duplicate bracket entry (" + std::to_string(e.i) + ", " +
                                              std::to_string(e.j) + ")");
        for (const auto& [k, v] : e.terms) {
            if (k >= n) throw ParseError("bracket result index out of range");
            c[k] += v;
        }
        table_[e.j * n + e.i] = -c;
    }
    if (validate) {
        auto bad = jacobi_failures();
        if (!bad.empty()) {
            auto [i, j, k] = bad.front();
            throw InvariantViolation("Jacobi identity fails on " + std::to_string(bad.size()) +
                                     " basis triples, first (" + names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
        }
    }
}

std::size_t LieAlgebra::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw ParseError("unknown basis element '" + std::string(name) + "'");
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> LieAlgebra::jacobi_failures() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> bad;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Element x = basis(i), y = basis(j), z = basis(k);
                Element s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
                if (!is_zero_vec(s)) bad.emplace_back(i, j, k);
            }
    return bad;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
    std::vector<BracketEntry> out;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const QVec& c = table_[i * n + j];
            if (is_zero_vec(c)) continue;
            BracketEntry e{i, j, {}};
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero()) e.terms.emplace_back(k, c[k]);
            out.push_back(std::move(e));
        }
    return out;
}

namespace {

template <class T>
std::string format_impl(const std::vector<std::string>& names, const Vec<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].str();
        bool compound = c.find_first_of("+-", 1) != std::string::npos;
        if (compound) {
            s += (s.empty() ? "" : "+") + ("(" + c + ")*") + names[i];
            continue;
        }
        bool neg = c[0] == '-';
        if (neg) c = c.substr(1);
        if (neg) s += "-";
        else if (!s.empty()) s += "+";
        if (c != "1") s += c + "*";
        s += names[i];
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string LieAlgebra::format(const QVec& v) const { return format_impl(names_, v); }
std::string LieAlgebra::format(const KVec& v) const { return format_impl(names_, v); }

Element LieAlgebra::parse_element(std::string_view text) const {
    Element out = zero();
    std::size_t p = 0;
    auto skip = [&] {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    };
    auto fail = [&](const std::string& why) {
        throw ParseError("cannot parse element '" + std::string(text) + "': " + why);
    };
    skip();
    if (p == text.size()) fail("empty");
    if (text.substr(p) == "0") return out;
    bool first = true;
    while (true) {
        skip();
        if (p == text.size()) break;
        int sign = 1;
        if (text[p] == '+' || text[p] == '-') {
            sign = text[p] == '-' ? -1 : 1;
            ++p;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rational coef(1);
        if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            std::size_t q = p;
            while (q < text.size() && (std::isdigit(static_cast<unsigned char>(text[q])) || text[q] == '/')) ++q;
            coef = Rational::parse(text.substr(p, q - p));
            p = q;
            skip();
            if (p < text.size() && text[p] == '*') {
                ++p;
                skip();
            }
        }
        std::size_t q = p;
        while (q < text.size() && (std::isalnum(static_cast<unsigned char>(text[q])) || text[q] == '_')) ++q;
        if (q == p) fail("expected a basis name");
        std::size_t idx = index_of(text.substr(p, q - p));
        out[idx] += Rational(sign) * coef;
        p = q;
    }
    return out;
}

std::vector<Element> LieAlgebra::parse_elements(std::string_view text) const {
    std::vector<Element> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        bool blank = true;
        for (char ch : piece)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (!blank) out.push_back(parse_element(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace lieembed
