#include "lieembed/vecfield.hpp"

#include "lieembed/errors.hpp"
#include "lieembed/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

namespace lieembed {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i, const Rational& c) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw VariableMismatch("monomial length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw VariableMismatch("polynomials over different variable counts");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial operator*(const Rational& c, Polynomial a) {
    if (c.is_zero()) return Polynomial(a.nvars_);
    for (auto& [m, v] : a.terms_) v *= c;
    return a;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        --d[var];
        r.add_term(d, c * Rational(m[var]));
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw VariableMismatch("evaluation point has wrong dimension");
    Rational s(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < m[i]; ++k) t *= point[i];
        s += t;
    }
    return s;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) s += cs;
        else s += (cs == "1" ? "" : cs + "*") + mono;
    }
    return s;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars) : t_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != t_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("cannot parse polynomial '" + std::string(t_) + "': " + why);
    }
    void skip() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < t_.size() && t_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Polynomial expr() {
        Polynomial p(vars_.size());
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (eat('-')) sign = -1;
            else if (!eat('+') && !first) break;
            first = false;
            Polynomial t = term();
            p += sign < 0 ? -t : t;
            skip();
            if (pos_ >= t_.size() || (t_[pos_] != '+' && t_[pos_] != '-')) break;
        }
        return p;
    }
    Polynomial term() {
        Polynomial p = power();
        while (true) {
            if (eat('*')) {
                p = p * power();
                continue;
            }
            skip();
            // implicit product: "2x", "x y", "(..)(..)"
            if (pos_ < t_.size() && (std::isalpha(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '(')) {
                p = p * power();
                continue;
            }
            return p;
        }
    }
    Polynomial power() {
        Polynomial base = atom();
        if (eat('^')) {
            skip();
            std::size_t q = pos_;
            while (q < t_.size() && std::isdigit(static_cast<unsigned char>(t_[q]))) ++q;
            if (q == pos_) fail("expected exponent");
            int e = std::stoi(std::string(t_.substr(pos_, q - pos_)));
            pos_ = q;
            Polynomial r = Polynomial::constant(vars_.size(), Rational(1));
            for (int k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }
    Polynomial atom() {
        skip();
        if (pos_ >= t_.size()) fail("unexpected end");
        if (eat('(')) {
            Polynomial p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (eat('-')) return -atom();
        char c = t_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t q = pos_;
            while (q < t_.size() && std::isdigit(static_cast<unsigned char>(t_[q]))) ++q;
            Rational v = Rational::parse(t_.substr(pos_, q - pos_));
            pos_ = q;
            // a/b binds as a rational literal
            skip();
            if (pos_ < t_.size() && t_[pos_] == '/') {
                ++pos_;
                skip();
                std::size_t r = pos_;
                while (r < t_.size() && std::isdigit(static_cast<unsigned char>(t_[r]))) ++r;
                if (r == pos_) fail("expected denominator");
                v /= Rational::parse(t_.substr(pos_, r - pos_));
                pos_ = r;
            }
            return Polynomial::constant(vars_.size(), v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t q = pos_;
            while (q < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[q])) || t_[q] == '_')) ++q;
            std::string_view name = t_.substr(pos_, q - pos_);
            // longest variable-name prefix, so "xy" reads as x*y when both exist
            for (std::size_t len = name.size(); len > 0; --len) {
                auto it = std::find(vars_.begin(), vars_.end(), name.substr(0, len));
                if (it != vars_.end()) {
                    pos_ += len;
                    return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
                }
            }
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view t_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
    return PolyParser(text, vars).parse();
}

bool PolyVectorField::is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string PolyVectorField::str() const {
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + components[i].str(vars) + ")*d" + vars[i];
    }
    return s.empty() ? "0" : s;
}

PolyVectorField vf_bracket(const PolyVectorField& V, const PolyVectorField& W) {
    if (V.vars != W.vars) throw VariableMismatch("bracket of fields over different variables");
    const std::size_t n = V.vars.size();
    PolyVectorField out{"[" + V.name + "," + W.name + "]", V.vars, std::vector<Polynomial>(n, Polynomial(n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!V.components[j].is_zero()) out.components[i] += V.components[j] * W.components[i].derivative(j);
            if (!W.components[j].is_zero()) out.components[i] -= W.components[j] * V.components[i].derivative(j);
        }
    return out;
}

PolyVectorField vf_combine(const std::vector<PolyVectorField>& fields, const QVec& c, std::string name) {
    if (fields.empty()) throw VariableMismatch("empty field list");
    const std::size_t n = fields[0].vars.size();
    PolyVectorField out{std::move(name), fields[0].vars, std::vector<Polynomial>(n, Polynomial(n))};
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (fields[k].vars != out.vars) throw VariableMismatch("fields over different variables");
        if (c[k].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) out.components[i] += c[k] * fields[k].components[i];
    }
    return out;
}

namespace {

using Key = std::pair<std::size_t, Monomial>;  // (component, monomial)

struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
        if (a.first != b.first) return a.first < b.first;
        return GrlexLess{}(a.second, b.second);
    }
};

std::map<Key, Rational, KeyLess> flatten(const PolyVectorField& f) {
    std::map<Key, Rational, KeyLess> out;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        for (const auto& [m, c] : f.components[i].terms()) out.emplace(Key{i, m}, c);
    return out;
}

}  // namespace

LieAlgebra structure_constants(const GeneratorCatalog& catalog) {
    const auto& F = catalog.fields;
    const std::size_t n = F.size();
    std::vector<std::string> names;
    for (const auto& f : F) {
        if (f.vars != catalog.vars) throw VariableMismatch("field '" + f.name + "' uses different variables");
        names.push_back(f.name);
    }
    std::vector<std::vector<PolyVectorField>> br(n, std::vector<PolyVectorField>(n));
    std::map<Key, std::size_t, KeyLess> index;
    auto register_keys = [&](const PolyVectorField& f) {
        for (const auto& [k, c] : flatten(f)) index.emplace(k, 0);
    };
    for (const auto& f : F) register_keys(f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            br[i][j] = vf_bracket(F[i], F[j]);
            register_keys(br[i][j]);
        }
    std::size_t row = 0;
    for (auto& [k, idx] : index) idx = row++;
    auto vec_of = [&](const PolyVectorField& f) {
        QVec v(index.size(), Rational(0));
        for (const auto& [k, c] : flatten(f)) v[index.at(k)] = c;
        return v;
    };
    QMatrix M(index.size(), n);
    for (std::size_t k = 0; k < n; ++k) M.set_col(k, vec_of(F[k]));
    if (rank(M) != n) throw InvariantViolation("catalog '" + catalog.name + "' has linearly dependent fields");

    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (br[i][j].is_zero()) continue;
            auto c = solve_linear(M, vec_of(br[i][j]));
            if (!c) {
                throw NotClosed("[" + F[i].name + ", " + F[j].name + "] = " + br[i][j].str() +
                                " is not in the span of the catalog");
            }
            BracketEntry e{i, j, {}};
            for (std::size_t k = 0; k < n; ++k)
                if (!(*c)[k].is_zero()) e.terms.emplace_back(k, (*c)[k]);
            entries.push_back(std::move(e));
        }
    return LieAlgebra(names, entries, true);
}

std::size_t invariant_count(const std::vector<PolyVectorField>& fields, std::size_t n_vars) {
    if (fields.empty()) return n_vars;
    for (const auto& f : fields)
        if (f.components.size() != n_vars) throw VariableMismatch("field '" + f.name + "' has wrong variable count");
    static const long primes[] = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    std::vector<std::vector<Rational>> points;
    std::vector<Rational> p0;
    for (std::size_t i = 0; i < n_vars; ++i) p0.emplace_back(primes[i % 16] + static_cast<long>(i / 16) * 53);
    points.push_back(p0);
    std::mt19937 rng(0);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    for (int k = 0; k < 4; ++k) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < n_vars; ++i) p.emplace_back(mpz_class(num(rng)), mpz_class(den(rng)));
        points.push_back(p);
    }
    std::size_t best = 0;
    for (const auto& pt : points) {
        QMatrix m(fields.size(), n_vars);
        for (std::size_t r = 0; r < fields.size(); ++r)
            for (std::size_t c = 0; c < n_vars; ++c) m(r, c) = fields[r].components[c].eval(pt);
        best = std::max(best, rank(m));
    }
    return n_vars - best;
}

}  // namespace lieembed
