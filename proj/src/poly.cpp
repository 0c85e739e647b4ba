#include "lieembed/poly.hpp"

#include "lieembed/errors.hpp"
#include "lieembed/numtheory.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace lieembed {

QPoly char_poly(const QMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return QPoly(Rational(1));
    std::vector<std::vector<QPoly>> a(n, std::vector<QPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = QPoly(-m(i, j));
            if (i == j) a[i][j] += QPoly::monomial(1);
        }
    // Leading principal minors of tI - m are monic, so pivots never vanish
    // and every division below is exact.
    QPoly prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = QPoly::exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return a[n - 1][n - 1];
}

QPoly squarefree_part(const QPoly& p) {
    if (p.degree() <= 0) return QPoly(Rational(1));
    return QPoly::exact_div(p, QPoly::gcd(p, p.derivative())).monic();
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
    std::vector<QPoly> out;
    if (p.degree() <= 0) return out;
    QPoly f = p.monic();
    QPoly df = f.derivative();
    QPoly a = QPoly::gcd(f, df);
    QPoly b = QPoly::exact_div(f, a);
    QPoly c = QPoly::exact_div(df, a);
    QPoly d = c - b.derivative();
    while (b.degree() > 0) {
        QPoly g = QPoly::gcd(b, d);
        out.push_back(g);
        b = QPoly::exact_div(b, g);
        c = QPoly::exact_div(d, g);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

namespace {

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        QPoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        seq.push_back(r);
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

std::size_t sign_changes(const std::vector<int>& signs) {
    std::size_t n = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++n;
        last = s;
    }
    return n;
}

std::size_t changes_at_infinity(const std::vector<QPoly>& seq, bool negative) {
    std::vector<int> s;
    for (const auto& q : seq) {
        int sg = q.lead().sign();
        if (negative && q.degree() % 2 == 1) sg = -sg;
        s.push_back(sg);
    }
    return sign_changes(s);
}

std::size_t changes_at(const std::vector<QPoly>& seq, const Rational& x) {
    std::vector<int> s;
    for (const auto& q : seq) s.push_back(q.eval(x).sign());
    return sign_changes(s);
}

}  // namespace

std::size_t count_real_roots(const QPoly& p) {
    if (p.degree() <= 0) return 0;
    auto seq = sturm_sequence(p);
    return changes_at_infinity(seq, true) - changes_at_infinity(seq, false);
}

std::size_t count_real_roots_between(const QPoly& p, const Rational& lo, const Rational& hi) {
    if (p.degree() <= 0) return 0;
    auto seq = sturm_sequence(p);
    return changes_at(seq, lo) - changes_at(seq, hi);
}

std::size_t count_negative_roots(const QPoly& p) {
    if (p.degree() <= 0) return 0;
    auto seq = sturm_sequence(p);
    return changes_at_infinity(seq, true) - changes_at(seq, Rational(0));
}

namespace {

using ZPoly = std::vector<mpz_class>;  // lowest degree first

mpz_class zeval(const ZPoly& h, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = h.rbegin(); it != h.rend(); ++it) r = r * x + *it;
    return r;
}

// Divides monic h by monic g; returns quotient if exact.
std::optional<ZPoly> zdiv(const ZPoly& h, const ZPoly& g) {
    if (h.size() < g.size()) return std::nullopt;
    ZPoly rem = h;
    ZPoly q(h.size() - g.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class f = rem[k + g.size() - 1];
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) rem[k + j] -= f * g[j];
    }
    for (std::size_t j = 0; j + 1 < g.size(); ++j)
        if (rem[j] != 0) return std::nullopt;
    return q;
}

std::vector<mpz_class> signed_divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    for (const auto& d : numtheory::divisors(n)) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

struct Quadratic {
    mpz_class b, c;  // t^2 + b t + c
};

// Kronecker search for a monic integer quadratic factor of h (no rational roots).
std::optional<Quadratic> find_quadratic(const ZPoly& h) {
    const mpz_class h0 = h[0];
    const mpz_class h1 = zeval(h, 1);
    const mpz_class hm1 = zeval(h, -1);
    for (const auto& c : signed_divisors(h0)) {
        for (const auto& e : signed_divisors(h1)) {
            mpz_class b = e - 1 - c;
            mpz_class gm1 = 1 - b + c;
            if (gm1 == 0 || hm1 % gm1 != 0) continue;
            mpz_class disc = b * b - 4 * c;
            if (disc >= 0) {
                mpz_class r = sqrt(disc);
                if (r * r == disc) continue;  // would have rational roots
            }
            if (zdiv(h, ZPoly{c, b, 1})) return Quadratic{b, c};
        }
    }
    return std::nullopt;
}

std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw ExtensionDegreeTooHigh("quadratic extension discriminant too large");
    return v.get_si();
}

// Roots of a monic squarefree rational polynomial.
std::vector<Scalar> squarefree_roots(const QPoly& f) {
    std::vector<Scalar> roots;
    const int n = f.degree();
    mpz_class D = 1;
    for (const auto& c : f.coeffs()) D = lcm(D, c.den());
    ZPoly h(static_cast<std::size_t>(n) + 1);
    mpz_class Dp = 1;
    for (int k = n; k >= 0; --k) {
        mpq_class v = f.coeff(static_cast<std::size_t>(k)).raw() * mpq_class(Dp);
        v.canonicalize();
        h[static_cast<std::size_t>(k)] = v.get_num();
        Dp *= D;
    }
    if (h[0] == 0) {
        roots.emplace_back(Rational(0));
        h.erase(h.begin());
    }
    if (h.size() > 1) {
        for (const auto& q : signed_divisors(h[0])) {
            if (h.size() <= 1) break;
            if (zeval(h, q) != 0) continue;
            roots.emplace_back(Rational(q, D));
            h = *zdiv(h, ZPoly{-q, 1});
        }
    }
    while (h.size() > 1) {
        if ((h.size() - 1) % 2 == 1) throw ExtensionDegreeTooHigh("irreducible factor of odd degree >= 3");
        auto quad = find_quadratic(h);
        if (!quad) throw ExtensionDegreeTooHigh("irreducible factor of degree >= 3");
        h = *zdiv(h, ZPoly{quad->c, quad->b, 1});
        mpz_class disc = quad->b * quad->b - 4 * quad->c;
        mpz_class r;
        mpz_class d = numtheory::squarefree_part(disc, &r);
        Rational re = Rational(mpz_class(-quad->b), mpz_class(2 * D));
        Rational im = Rational(r, mpz_class(2 * D));
        std::int64_t dd = to_int64(d);
        roots.emplace_back(re, im, dd);
        roots.emplace_back(re, -im, dd);
    }
    return roots;
}

}  // namespace

std::vector<Eigenvalue> poly_roots(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial");
    std::map<Scalar, std::size_t> mult;
    auto parts = squarefree_decomposition(p);
    std::int64_t ext = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() <= 0) continue;
        for (auto& r : squarefree_roots(parts[i])) {
            if (!r.is_rational()) {
                if (ext != 0 && ext != r.d())
                    throw ExtensionDegreeTooHigh("roots need both sqrt(" + std::to_string(ext) + ") and sqrt(" +
                                                 std::to_string(r.d()) + ")");
                ext = r.d();
            }
            mult[r] += i + 1;
        }
    }
    std::vector<Eigenvalue> out;
    for (auto& [v, k] : mult) out.push_back({v, k});
    return out;
}

std::vector<Eigenvalue> eigenvalues(const QMatrix& m) { return poly_roots(char_poly(m)); }

}  // namespace lieembed
